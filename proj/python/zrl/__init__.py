"""Python bindings for the zrl exact verification toolkit."""

from _zrl import (  # noqa: F401
    catalog,
    class_distribution,
    coinvariant_torsion,
    group_order_mod_p,
    hom_steinberg,
    modular_invariant_dims,
    run_suite,
    suite_names,
    tits_building_oracle,
)

__all__ = [
    "catalog",
    "class_distribution",
    "coinvariant_torsion",
    "group_order_mod_p",
    "hom_steinberg",
    "modular_invariant_dims",
    "run_suite",
    "suite_names",
    "tits_building_oracle",
]
