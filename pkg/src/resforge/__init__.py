"""Power residue symbols over unramified p-adic fields.

The same symbol is computed by three independent routes (direct formula,
orbit determinants of pointed mu_n-sets, commutators in a central
extension of GL_1(K)) and cross-verified; the library exposes each layer
of the construction.
"""

from .errors import EnumerationBound, PrecisionError
from .extension import (CocycleVal, ExtElem, RelDet, SymbolEngine, cocycle,
                        comm_symbol, corrected_symbol, ext_identity,
                        ext_inverse, ext_lift, ext_mul, get_engine, kappa,
                        reldet, rho)
from .fields import (FieldCtx, MuScalar, extension_field, field_make,
                     mu_dlog, mu_embed, norm_check, power_residue_char,
                     zolotarev_sign)
from .lattices import (KMat, Lattice, LatticeQuotient, lat_apply,
                       lat_contains, lat_contains_lattice, lat_intersect,
                       lat_sum, lattice_from_json, lattice_to_json,
                       principal_lattice, quotient_struct, rel_dim,
                       standard_lattice)
from .modules import (FiniteModule, ModuleHom, identity_hom, module_as_muset,
                      module_aut_as_musetaut, scalar_hom)
from .musets import (MuSet, MuSetAut, OrbitView, aut_abelianize, aut_compose,
                     aut_delta, aut_extend, aut_identity, aut_inverse,
                     aut_to_permutation, muset_product, perm_sign)
from .padic import (KElem, LocalField, k_add, k_inv, k_mul, k_one_minus,
                    k_reduce_mod_pi, k_sub, local_field)
from .rings import RingCtx, ring_make
from .symbols import (SymbolReport, crosscheck, delta_route_symbol,
                      power_residue_symbol, steinberg_check, tame_symbol)
from .torsor import (MuLine, TorsorElem, det_line, det_iso_scalar,
                     det_of_module_aut, duality_contract, elem_tensor,
                     exact_seq_iso, fiber_iso, line_dual, line_tensor)
from .verify import run_suite

__version__ = "0.1.0"
