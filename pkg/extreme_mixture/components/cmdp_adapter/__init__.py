"""Constrained MDP front-end: deterministic policies as atoms."""

from .models import Mdp, Policy
from .tools import build_instance, enumerate_policies, evaluate_policy, occupation_measure
