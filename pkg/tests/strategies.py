from hypothesis import reject
from hypothesis.strategies import composite, integers, sampled_from

from critical_popular_matching.exceptions import GenerationError
from critical_popular_matching.formats import parse_instance
from critical_popular_matching.generators import GenSpec, generate_random
from critical_popular_matching.models import MarriageInstance

from .conftest import I2_TEXT


@composite
def instances(draw, max_men=3, max_women=3, max_critical=1, densities=(0.5, 0.8, 1.0)):
    """Feasible random instances, each one reproducible from its GenSpec"""
    n_men = draw(integers(1, max_men))
    n_women = draw(integers(1, max_women))
    n_critical = draw(integers(0, min(max_critical, n_men, n_women)))
    spec = GenSpec(
        n_men=n_men,
        n_women=n_women,
        density=draw(sampled_from(densities)),
        n_critical=n_critical,
        seed=draw(integers(0, 10_000)),
    )
    try:
        return generate_random(spec)
    except GenerationError:
        reject()


def uncritical_instances(max_men=3, max_women=3):
    return instances(max_men=max_men, max_women=max_women, max_critical=0)


def disjoint_union(*parts):
    """Places the instances side by side, the vertices of the k-th one getting the suffix '_k'"""
    men, women, pref, critical = [], [], {}, []
    for k, inst in enumerate(parts):
        rename = {vertex: f"{vertex}_{k}" for vertex in inst.vertices}
        men.extend(rename[man] for man in inst.men)
        women.extend(rename[woman] for woman in inst.women)
        critical.extend(rename[vertex] for vertex in inst.critical)
        for vertex in inst.vertices:
            pref[rename[vertex]] = [rename[other] for other in inst.pref(vertex)]
    return MarriageInstance(men, women, pref, critical)


@composite
def gadget_unions(draw, max_men=3, max_women=3, max_critical=1):
    """
    A random instance next to two copies of I2. Taking the smallest matching on one copy and the
    largest on the other always gives a popular feasible matching that is neither of minimum size nor dominant.
    """
    gadget = parse_instance(I2_TEXT)
    part = draw(instances(max_men=max_men, max_women=max_women, max_critical=max_critical))
    return disjoint_union(gadget, gadget, part)
