"""Elementary cellular automata on rings under deterministic update modes"""
from automata.configuration import Configuration, InputError, RunDecomposition, run_decomposition
from automata.dynamics import (DynamicalSystem, OrbitRecord, fixed_points_parallel, orbit, step,
                               substep)
from automata.modes import (ModeSignature, SequentialMode, UpdateMode, mode_signature,
                            representative_modes, temporal_compose)
from automata.rules import (RuleTable, SymmetryClass, das_condition, find_walls, is_active,
                            local_apply, parallel_step, symmetry_class)

__all__ = [
    "Configuration", "InputError", "RunDecomposition", "run_decomposition",
    "DynamicalSystem", "OrbitRecord", "fixed_points_parallel", "orbit", "step", "substep",
    "ModeSignature", "SequentialMode", "UpdateMode", "mode_signature", "representative_modes",
    "temporal_compose",
    "RuleTable", "SymmetryClass", "das_condition", "find_walls", "is_active", "local_apply",
    "parallel_step", "symmetry_class",
]
