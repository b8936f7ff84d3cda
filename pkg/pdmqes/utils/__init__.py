"""The module containing the `utils`.

Modules:
    numbers: Exact and float number helpers shared by all subpackages.

"""
