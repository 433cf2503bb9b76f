"""Dimension, extreme points and Carathéodory reduction."""

from .models import Decomposition
from .tools import affine_dimension, decompose, is_extreme
