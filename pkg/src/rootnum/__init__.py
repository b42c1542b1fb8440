"""Root numbers of integer fibers in one-parameter families of elliptic
curves, computed two independent ways and cross-validated:

* a direct path: minimal models and Tate's algorithm at every bad prime,
  then the product of local root numbers;
* a closed sign formula over the family: a Liouville factor on the
  multiplicative locus times per-place Jacobi-symbol data.

On top of the two paths sit sieves for averaging the sign along squarefree
or Liouville-weighted fiber sets, and a search that certifies sign variation
by exhibiting an explicit pair of fibers with opposite root numbers.
"""

from importlib import import_module

__version__ = "0.1.0"

_EXPORTS = {
    "factorize": "rootnum.intarith",
    "jacobi": "rootnum.intarith",
    "liouville": "rootnum.intarith",
    "modified_jacobi": "rootnum.intarith",
    "IntPoly": "rootnum.polyring",
    "Kodaira": "rootnum.surface",
    "Place": "rootnum.surface",
    "Surface": "rootnum.surface",
    "build_surface": "rootnum.surface",
    "FiberCurve": "rootnum.localdata",
    "curve_from_model": "rootnum.localdata",
    "global_root_number_direct": "rootnum.localdata",
    "instantiate_fiber": "rootnum.localdata",
    "minimal_model": "rootnum.localdata",
    "tate_local": "rootnum.localdata",
    "root_number_analytic": "rootnum.lfunction",
    "root_number_formula": "rootnum.signformula",
    "phi": "rootnum.signformula",
    "periodicity_data": "rootnum.signformula",
    "density_constant": "rootnum.sieves",
    "squarefree_census": "rootnum.sieves",
    "variation_pair_search": "rootnum.variation",
    "family_by_name": "rootnum.catalog_io",
}

__all__ = sorted(_EXPORTS) + ["__version__"]


def __getattr__(name):
    mod = _EXPORTS.get(name)
    if mod is None:
        raise AttributeError(f"module 'rootnum' has no attribute {name!r}")
    return getattr(import_module(mod), name)


def __dir__():
    return __all__
