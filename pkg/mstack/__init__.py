"""exact cohomology and point counts of moduli stacks of bundles

"""
from mstack._version import __version__
from mstack.objects.curve import CurveData, GroundField
from mstack.objects.eigen import EigenMonomial
from mstack.objects.hnType import HNPolygon, HNType
from mstack.objects.polynomial import IntPolynomial, RationalFunction
from mstack.objects.ring import GeneratorDescriptor, GradedRingSpec
from mstack.objects.series import TruncatedSeries
from mstack.objects.splitting import SplittingType
