import factory
import factory.random

from cellcrystals.cartan.constants import Family
from cellcrystals.cartan.words import longest_word

from ..elements import CrystalElement


class CrystalElementFactory(factory.Factory):
    word = factory.LazyAttribute(lambda o: longest_word(o.family, o.rank))
    z = factory.LazyAttribute(
        lambda o: tuple(
            factory.random.randgen.randint(-o.radius, o.radius) for _ in o.word
        )
    )

    class Meta:
        model = CrystalElement

    class Params:
        family = Family.A
        rank = 2
        radius = 5
