# coding: utf-8
"""
Description:
    Deterministic random instances, used by the test-suite, the 'gen' command and the differential
    'verify' command. The same GenSpec always yields the same instance.
Classes:
    GenSpec: Parameters of a random instance
Functions:
    generate_random: Builds a feasible random instance from a GenSpec
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
import random
from dataclasses import dataclass

# Third-party

# Local
from .config import Config
from .exceptions import GenerationError
from .models import MarriageInstance, has_feasible


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Classes
# --------------------------------------------------------------------------------
@dataclass(frozen=True)
class GenSpec:
    """Parameters of a random instance: sizes, edge probability, number of critical men and seed"""
    n_men: int
    n_women: int
    density: float = 0.6
    n_critical: int = 0
    seed: int = 0

    def __post_init__(self):
        if self.n_men < 0 or self.n_women < 0:
            raise GenerationError("Vertex counts cannot be negative", seed=self.seed)
        if not 0 <= self.density <= 1:
            raise GenerationError(f"Density must lie in [0, 1], got {self.density}", seed=self.seed)
        if not 0 <= self.n_critical <= self.n_men:
            raise GenerationError("The number of critical men must lie between 0 and the number of men", seed=self.seed)


# --------------------------------------------------------------------------------
# > Functions
# --------------------------------------------------------------------------------
def generate_random(spec, config=None):
    """
    Description:
        Builds a random instance from a GenSpec:
            - each (man, woman) pair is an edge with probability 'density'
            - each list is a uniformly random permutation of the vertex's neighbors
            - the critical set is made of the first 'n_critical' men having at least one neighbor
        Draws are repeated (from the same random stream) until the instance admits a feasible matching
    Args:
        spec (GenSpec): The parameters of the instance
        config (Config, optional): Provides the retry budget. Defaults to None.
    Returns:
        MarriageInstance: A feasible instance
    """
    config = config or Config()
    rng = random.Random(spec.seed)
    for attempt in range(1, config.generator_retries + 1):
        inst = _draw(rng, spec)
        if inst is not None and has_feasible(inst):
            if attempt > 1:
                log.debug("seed %s: feasible instance after %d draws", spec.seed, attempt)
            return inst
    raise GenerationError(
        f"No feasible instance after {config.generator_retries} draws (seed {spec.seed})",
        seed=spec.seed,
    )


# --------------------------------------------------------------------------------
# > Helpers
# --------------------------------------------------------------------------------
def _draw(rng, spec):
    """Draws one instance, or returns None when too few men have neighbors"""
    men = [f"m{i}" for i in range(1, spec.n_men + 1)]
    women = [f"w{i}" for i in range(1, spec.n_women + 1)]
    neighbors = {u: [] for u in men + women}
    for man in men:
        for woman in women:
            if rng.random() < spec.density:
                neighbors[man].append(woman)
                neighbors[woman].append(man)
    pref = {u: rng.sample(lst, len(lst)) for u, lst in neighbors.items()}
    critical = [m for m in men if neighbors[m]][:spec.n_critical]
    if len(critical) < spec.n_critical:
        return None
    return MarriageInstance(men, women, pref, critical)
