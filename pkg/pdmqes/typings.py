from typing import Dict, List, Optional, TypedDict, Union


# ================================================
# Config Definitions
# ================================================


class SolverAttrs(TypedDict):
    """The typing for the numerical settings.

    Attributes:
        oracle_grid_points (int): The number of interior points of the coarse oracle grid.
        oracle_starting_grid_points (int): The coarse grid of starting potential solves.
        oracle_min_grid_points (int): The minimal admissible number of grid points.
        oracle_max_levels (int): The maximal number of levels the oracle computes.
        oracle_eigenvalue_tolerance (float): The absolute bisection tolerance of the eigensolver.
        oracle_wall_floor (float): The lower bound of the truncation wall height.
        oracle_wall_factor (float): The wall height as a multiple of the largest level estimate.
        oracle_barrier_action (float): The tunneling action required beyond the wall.
        oracle_flat_tail_length (float): The u-length kept past the flat end of a potential.
        oracle_potential_ceiling (float): The clipping value of the sampled potential.
        oracle_endpoint_snap (float): Relative distance below which a cut snaps to a finite end.
        oracle_box_enlargement (float): The enlargement factor of the robustness check.
        oracle_truncation_tolerance (float): The allowed eigenvalue shift on enlargement.
        energy_tolerance (float): Analytic vs numeric energy agreement.
        overlap_threshold (float): Analytic vs numeric eigenvector overlap.
        float_coefficient_tolerance (float): Coefficient tolerance of float-valued objects.
        residual_step (float): The base step of the five-point stencil.
        residual_epsilon (float): The floor of residual denominators.
        residual_tolerance (float): The Hamiltonian residual acceptance bound.
        node_grid_points (int): The grid size used for sign change counting.
        boundary_ladder_rungs (int): The length of the boundary ladder.
        boundary_tail_rungs (int): The ladder tail that must decrease.
        significant_digits (int): The significant digits of printed floats.

    """

    oracle_grid_points: int
    oracle_starting_grid_points: int
    oracle_min_grid_points: int
    oracle_max_levels: int
    oracle_eigenvalue_tolerance: float
    oracle_wall_floor: float
    oracle_wall_factor: float
    oracle_barrier_action: float
    oracle_flat_tail_length: float
    oracle_potential_ceiling: float
    oracle_endpoint_snap: float
    oracle_box_enlargement: float
    oracle_truncation_tolerance: float
    energy_tolerance: float
    overlap_threshold: float
    float_coefficient_tolerance: float
    residual_step: float
    residual_epsilon: float
    residual_tolerance: float
    node_grid_points: int
    boundary_ladder_rungs: int
    boundary_tail_rungs: int
    significant_digits: int


# ================================================
# Document Definitions
# ================================================


class InstanceSpecAttrs(TypedDict, total=False):
    """The typing for an instance specification.

    Numbers are given as strings of exact rationals (e.g. `"3/4"`) or as plain numbers.

    Attributes:
        family (str): The family name, one of `FAMILY.ALL`.
        m (int): The extension index.
        alpha (Union[str, int, float]): The deformation parameter.
        B_top (Union[str, int, float]): The top potential coefficient.
        L (Union[str, int, float, None]): The angular parameter (RHO and KC only).
        B2minus (Union[str, int, float, None]): The coefficient B^2 of exp(-2x) (Morse only).

    """

    family: str
    m: int
    alpha: Union[str, int, float]
    B_top: Union[str, int, float]
    L: Union[str, int, float, None]
    B2minus: Union[str, int, float, None]


class InstanceAttrs(TypedDict):
    """The typing for the JSON description of a family instance.

    Attributes:
        schema_version (str): The schema version.
        spec (InstanceSpecAttrs): The specification the instance was built from.
        base (str): The base coordinate kind.
        domain (List[Optional[float]]): The x interval, `None` marking an infinite end.
        f (Dict[str, str]): The deforming function coefficients.
        V (Dict[str, str]): The potential coefficients.
        W (Dict[str, str]): The superpotential coefficients.
        Wprime (Dict[str, str]): The superpotential of the second step.
        Wplus (Dict[str, str]): The generating function.
        Wminus (Dict[str, str]): The complementary generating function.
        E0 (str): The ground state energy.
        E1 (str): The first excited state energy.
        gap (str): The energy gap E1 - E0.
        E0_exact (str): The ground state energy as a reduced fraction when exact.
        E1_exact (str): The first excited state energy as a reduced fraction when exact.
        gap_exact (str): The energy gap as a reduced fraction when exact.
        psi0 (Dict[str, Union[str, Dict[str, str]]]): The ground state form.
        psi1 (Dict[str, Union[str, Dict[str, str]]]): The first excited state form.
        partner (Dict[str, str]): The partner potential coefficients without constant.
        R (str): The constant of the partner potential.
        Delta (Optional[str]): The Morse parameter.

    """

    schema_version: str
    spec: InstanceSpecAttrs
    base: str
    domain: List[Optional[float]]
    f: Dict[str, str]
    V: Dict[str, str]
    W: Dict[str, str]
    Wprime: Dict[str, str]
    Wplus: Dict[str, str]
    Wminus: Dict[str, str]
    E0: str
    E1: str
    gap: str
    E0_exact: str
    E1_exact: str
    gap_exact: str
    psi0: Dict[str, Union[str, Dict[str, str]]]
    psi1: Dict[str, Union[str, Dict[str, str]]]
    partner: Dict[str, str]
    R: str
    Delta: Optional[str]


class SpectrumAttrs(TypedDict):
    """The typing for the JSON description of an oracle spectrum.

    Attributes:
        schema_version (str): The schema version.
        eigenvalues (List[str]): The eigenvalues of the coarse grid.
        richardson_estimate (List[str]): The extrapolated eigenvalues.
        error_bound (List[str]): The coarse to fine grid differences.
        node_counts (List[int]): The sign changes of each eigenvector.
        grid_points (int): The number of interior points of the coarse grid.
        u_domain (List[str]): The truncated u interval.
        truncation_shift (str): The largest eigenvalue shift under box enlargement.

    """

    schema_version: str
    eigenvalues: List[str]
    richardson_estimate: List[str]
    error_bound: List[str]
    node_counts: List[int]
    grid_points: int
    u_domain: List[str]
    truncation_shift: str


class CrosscheckAttrs(TypedDict):
    """The typing for a single compared quantity.

    Attributes:
        quantity (str): The name of the compared quantity.
        expected (str): The catalog value.
        actual (str): The value computed from scratch.

    """

    quantity: str
    expected: str
    actual: str


class VerificationAttrs(TypedDict):
    """The typing for the JSON verification report of one instance.

    Attributes:
        schema_version (str): The schema version.
        spec (InstanceSpecAttrs): The verified instance.
        checks (Dict[str, bool]): The outcome of every check.
        energy_errors (List[str]): The analytic vs numeric energy differences.
        overlaps (List[str]): The analytic vs numeric eigenvector overlaps.
        node_counts (List[int]): The numeric node counts of the two levels.
        passed (bool): Whether every check passed.

    """

    schema_version: str
    spec: InstanceSpecAttrs
    checks: Dict[str, bool]
    energy_errors: List[str]
    overlaps: List[str]
    node_counts: List[int]
    passed: bool
