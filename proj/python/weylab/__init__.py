from ._core import (
    Op,
    adjoint,
    apply_word,
    bc_curve,
    build_l4,
    commutator,
    curve_is_squarefree,
    default_partner_bound,
    dixmier,
    find_commuting,
    find_partner,
    genus1_v_from_w,
    leading_law,
    lemma1_curve,
    lemma31_certificate,
    mokhov,
    parse,
    sharp,
    solve_q,
    solve_vw,
    triple_ad_x,
)

__all__ = [
    "Op",
    "adjoint",
    "apply_word",
    "bc_curve",
    "build_l4",
    "commutator",
    "curve_is_squarefree",
    "default_partner_bound",
    "dixmier",
    "find_commuting",
    "find_partner",
    "genus1_v_from_w",
    "leading_law",
    "lemma1_curve",
    "lemma31_certificate",
    "mokhov",
    "parse",
    "sharp",
    "solve_q",
    "solve_vw",
    "triple_ad_x",
]
