"""Components of the solver, one subpackage per concern."""
