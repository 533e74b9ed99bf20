from p1series.elliptic.cases import CUSTOM, EQUIANHARMONIC, LEMNISCATIC, EllipticCase
from p1series.elliptic.eisenstein import EisensteinValue, bernoulli_numbers, eisenstein_from_laurent, \
    eisenstein_lattice_sum, eisenstein_q_oracle, eisenstein_weight
from p1series.elliptic.half_period import half_period, half_period_closed_form, lemniscatic_half_period_agm
from p1series.elliptic.hurwitz import hurwitz_from_eisenstein, hurwitz_from_laurent, hurwitz_numbers

__all__ = [
    "EllipticCase", "EQUIANHARMONIC", "LEMNISCATIC", "CUSTOM",
    "half_period", "half_period_closed_form", "lemniscatic_half_period_agm",
    "EisensteinValue", "eisenstein_weight", "eisenstein_from_laurent", "eisenstein_q_oracle",
    "eisenstein_lattice_sum", "bernoulli_numbers",
    "hurwitz_numbers", "hurwitz_from_laurent", "hurwitz_from_eisenstein",
]
