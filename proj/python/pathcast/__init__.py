"""Visual path prediction: reward/cost maps, grid planning and evaluation."""

from ._core import (
    InputError,
    ObjectRecord,
    PlanningError,
    Prediction,
    Scene,
    UsageError,
    __version__,
    angular_difference,
    diagonal_distance,
    direction_between,
    evaluate_dataset,
    generate_synthetic_scene,
    load_scene,
    mhd,
    orientation_loss,
    path_cost_audit,
    predict,
    straight_line_baseline,
    to_cost_map,
    top_n_average,
    wrap_angle,
    write_scene_directory,
)

__all__ = [
    "InputError",
    "ObjectRecord",
    "PlanningError",
    "Prediction",
    "Scene",
    "UsageError",
    "__version__",
    "angular_difference",
    "diagonal_distance",
    "direction_between",
    "evaluate_dataset",
    "generate_synthetic_scene",
    "load_scene",
    "mhd",
    "orientation_loss",
    "path_cost_audit",
    "predict",
    "straight_line_baseline",
    "to_cost_map",
    "top_n_average",
    "wrap_angle",
    "write_scene_directory",
]
