"""Exact Gysin push-forwards, Littlewood–Richardson identities and Schubert
classes on Grassmann bundles, in the universal Chern-root model."""

__version__ = "0.1.0"

from .chow import E, FlagContext, Q, U, chern, s_K, s_skew, schur_class_U, segre
from .gysin import (
    pi_pushforward,
    pi_pushforward_schur,
    theta_pushforward,
    theta_pushforward_iterative,
    theta_pushforward_schur,
    varpi_pushforward,
    varpi_pushforward_schur,
)
from .identities import (
    duality_pushforward,
    giambelli_class,
    giambelli_system_check,
    jlp_pushforward,
    jlp_sum,
    laplace_expand_check,
)
from .partitions import straighten
from .polyring import Poly, schur_expand, schur_poly, skew_schur_poly
from .tableaux import lr_coefficient

__all__ = [
    "E", "FlagContext", "Q", "U", "chern", "s_K", "s_skew", "schur_class_U", "segre",
    "pi_pushforward", "pi_pushforward_schur", "theta_pushforward", "theta_pushforward_iterative",
    "theta_pushforward_schur", "varpi_pushforward", "varpi_pushforward_schur",
    "duality_pushforward", "giambelli_class", "giambelli_system_check", "jlp_pushforward",
    "jlp_sum", "laplace_expand_check", "straighten", "Poly", "schur_expand", "schur_poly",
    "skew_schur_poly", "lr_coefficient",
]
