from signotopes.core import (
    Packet,
    Signotope,
    SignotopeVerdict,
    Triple,
    all_minus,
    all_plus,
    apply_flips,
    complement,
    delete_line,
    first_violation,
    flip,
    flippable_triples,
    is_flippable,
    mirror,
    neighbors,
    triples,
    validate_signotope,
)
from signotopes.enumeration import count_signotopes, enumerate_signotopes, random_signotope
from signotopes.wiring import (
    WiringDiagram,
    local_sequences,
    signotope_to_wiring,
    sweep_word,
    wiring_to_signotope,
)
