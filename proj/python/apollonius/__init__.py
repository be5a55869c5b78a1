"""Exact predicates for the Apollonius diagram of spheres."""

from ._apollo import *  # noqa: F401,F403
from ._apollo import ApolloError, Site  # noqa: F401
