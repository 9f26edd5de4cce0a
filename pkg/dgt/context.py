# -*- coding: utf-8 -*-
#

import os

import numpy as np


def _env_seed():
    try:
        return int(os.environ.get("DGT_SEED", "0"))
    except ValueError:
        return 0


class ExecutionContext(object):
    stack = []

    def __init__(self, seed=None, cyclic_retries=32, companion_limit=300, candidate_limit=4096,
                 allow_algebraic=False, tower_hyper=True, progress=False):
        self._seed = _env_seed() if seed is None else int(seed)
        self._cyclic_retries = cyclic_retries
        self._companion_limit = companion_limit
        self._candidate_limit = candidate_limit
        self._allow_algebraic = allow_algebraic
        self._tower_hyper = tower_hyper
        self._progress = progress

    def _push(self):
        self.stack.append(self)

    def _pop(self):
        popped = self.stack.pop()
        if popped is not self:
            raise RuntimeError("Popped wrong context")
        return self

    def __enter__(self):
        self._push()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self._pop()

    @classmethod
    def get_active(cls):
        if not cls.stack:
            cls()._push()
        return cls.stack[-1]

    @classmethod
    def get_seed(cls):
        return cls.get_active()._seed

    @classmethod
    def set_seed(cls, seed):
        """set the seed of the cyclic vector search
        :param seed: int
        """
        cls.get_active()._seed = int(seed)

    @classmethod
    def get_rng(cls):
        return np.random.default_rng(cls.get_seed())

    @classmethod
    def get_cyclic_retries(cls):
        return cls.get_active()._cyclic_retries

    @classmethod
    def get_companion_limit(cls):
        return cls.get_active()._companion_limit

    @classmethod
    def set_companion_limit(cls, limit):
        cls.get_active()._companion_limit = limit

    @classmethod
    def get_candidate_limit(cls):
        return cls.get_active()._candidate_limit

    @classmethod
    def get_allow_algebraic(cls):
        return cls.get_active()._allow_algebraic

    @classmethod
    def set_allow_algebraic(cls, flag):
        cls.get_active()._allow_algebraic = bool(flag)

    @classmethod
    def get_tower_hyper(cls):
        return cls.get_active()._tower_hyper

    @classmethod
    def get_progress(cls):
        return cls.get_active()._progress

    @classmethod
    def set_progress(cls, flag):
        cls.get_active()._progress = bool(flag)


def set_seed(seed):
    ExecutionContext.set_seed(seed)


def get_seed():
    return ExecutionContext.get_seed()


def set_companion_limit(limit):
    ExecutionContext.set_companion_limit(limit)


def set_allow_algebraic(flag):
    ExecutionContext.set_allow_algebraic(flag)


def set_progress(flag):
    ExecutionContext.set_progress(flag)
