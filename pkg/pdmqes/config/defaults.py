from ..typings import SolverAttrs

DEFAULT_CONFIG: SolverAttrs = {
    # oracle grid
    "oracle_grid_points": 4000,
    "oracle_starting_grid_points": 32000,
    "oracle_min_grid_points": 200,
    "oracle_max_levels": 10,
    "oracle_eigenvalue_tolerance": 1e-13,
    # oracle truncation
    "oracle_wall_floor": 1e3,
    "oracle_wall_factor": 50.0,
    "oracle_barrier_action": 30.0,
    "oracle_flat_tail_length": 60.0,
    "oracle_potential_ceiling": 1e12,
    "oracle_endpoint_snap": 1e-6,
    "oracle_box_enlargement": 1.5,
    "oracle_truncation_tolerance": 1e-7,
    # verification tolerances
    "energy_tolerance": 1e-5,
    "overlap_threshold": 0.999999,
    "float_coefficient_tolerance": 1e-12,
    # hamiltonian residual
    "residual_step": 1e-3,
    "residual_epsilon": 1e-30,
    "residual_tolerance": 1e-6,
    # wavefunction probes
    "node_grid_points": 2001,
    "boundary_ladder_rungs": 12,
    "boundary_tail_rungs": 5,
    # output
    "significant_digits": 12,
}
