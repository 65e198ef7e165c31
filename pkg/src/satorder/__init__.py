"""Saturation and interval-order analysis for finite partial orders.

Core objects live in the submodules; the most commonly used names are
re-exported here.  The HTTP service is in :mod:`satorder.service`, the
command-line client in :mod:`satorder.cli`.
"""

__version__ = "0.1.0"

from .errors import (
    CycleDetected,
    NewPointsNotInjective,
    NoMaximum,
    NotASetRepresentation,
    NotIntervalOrder,
    NotParallel,
    NotParsimonious,
    ParseError,
    PreconditionViolated,
    SatOrderError,
    TooLarge,
    TooSmall,
)
from .posets import (
    Poset,
    TwoTwoWitness,
    antichain,
    chain,
    generate,
    n_poset,
    random_poset,
    skew_towers,
    skew_towers_names,
    topped_two_two,
    two_plus_two,
)
from .representations import (
    InducedOrder,
    NewPointMap,
    SaturationVerdict,
    SetRepresentation,
    enumerate_parsimonious,
    induced_order,
    is_parsimonious,
    is_parsimonious_by_counting,
    is_saturated_oracle,
    is_set_representation,
    new_point_map,
    principal_ideal_rep,
    rep_from_new_points,
)
from .saturation import (
    Bouquet,
    Fan,
    are_parallel,
    canonical_bouquets,
    check_fan_criterion,
    fan_from_bouquet,
    is_fan,
    is_saturated_exhaustive,
    is_saturated_fast,
    is_skew_top,
    make_bouquet,
    merging_representation,
    skewly_topping,
    witness_bouquets_from_rep,
)
from .interval import (
    IntervalRepresentation,
    interval_representation,
    is_interval_order,
    verify_interval_representation,
)
from .verify import (
    CampaignConfig,
    CampaignReport,
    all_posets,
    campaign,
    cross_validate,
)
