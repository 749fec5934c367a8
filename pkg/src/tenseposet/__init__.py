"""Tense operators, completions and residuated connectives on finite
bounded posets, verified by brute force."""

from .completion import DMLattice, dm_complete, dm_join, dm_meet, hat_tense
from .connectives import imp, neg, odot, set_imp, set_odot, traj_imp, traj_odot
from .errors import (ArityError, CycleError, EmptySetError, NonSerialError,
                     ParseError, RelationError, ResolveError,
                     SliceMismatchError, SizeError, TensePosetError,
                     UnknownLabelError)
from .frames import TimeFrame, build_frame
from .orders import SubsetOrder, compare
from .poset import Poset, bits, build_poset
from .residuated import (ResiduatedDM, ResiduatedPoset, boxdot,
                         check_adjunction, check_dr_laws, check_dt_laws,
                         double_arrow, validate_residuated)
from .synthesis import (ExtendedFrame, OperatorBundle, exact_relation,
                        extend_frame, induce_relation, induced_ops_from)
from .tense import (TenseOp, apply_tense, apply_tense_trajectory,
                    check_dynamic_pair, check_galois, compose, family_slices,
                    make_family, materialize_phi, traj_compare)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
