"""Multipartite tournament toolkit: generators, cycle search, recognition."""

from .cycles import (
    CycleSpectrum,
    CycleWitness,
    ExtensionReport,
    HAVE_COMPILED,
    all_cycles_of_length,
    can_insert,
    check_extension_range,
    cycle_spectrum,
    find_cycle,
)
from .digraph import (
    MultipartiteTournament,
    build,
    diam,
    dist,
    dominates,
    is_rich,
    is_strong,
    no_arc_back,
)
from .families import (
    HSpec,
    QSpec,
    WSpec,
    gen_H,
    gen_Q,
    gen_Qprime,
    gen_W,
    random_rich,
    random_strong_hspec,
)

from .formats import from_json, to_dot, to_json
from .harness import (
    CampaignConfig,
    CampaignReport,
    check_bondy,
    check_c1_meets_all_parts,
    check_lemma6_shape,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    perturb,
    run_campaign,
)
from .recognize import (
    MEMBER_OF_H,
    MEMBER_OF_Q,
    MEMBER_OF_W,
    NOT_MEMBER,
    RecognitionResult,
    TwinQuotient,
    recognize,
    recognize_H,
    recognize_Q,
    recognize_W,
    twin_quotient,
)

__version__ = "0.1.0"
