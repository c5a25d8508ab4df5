"""Python access to the gnatfam core.

Instances are described by the same JSON documents the command-line tool
reads; families come back as ``{character: {ray_id: "p/q"}}`` dicts.
"""
import json

from ._core import GnatfamError, Instance as _Instance

__all__ = ["GnatfamError", "Instance"]


class Instance:
    def __init__(self, spec):
        text = spec if isinstance(spec, str) else json.dumps(spec)
        self._core = _Instance.from_json(text)

    @property
    def dimension(self):
        return self._core.dimension

    @property
    def group_order(self):
        return self._core.group_order

    @property
    def characters(self):
        return list(self._core.characters)

    def rays(self):
        return json.loads(self._core.rays_json())

    def family(self, which="canonical"):
        getter = {
            "canonical": self._core.canonical_json,
            "maxshift": self._core.maxshift_json,
            "minshift": self._core.minshift_json,
        }[which]
        return json.loads(getter())

    def counts(self, jobs=1):
        out = json.loads(self._core.counts_json(jobs))
        out["total"] = int(out["total"])
        return out

    def ray_solutions(self, ray, brute_force=False):
        return self._core.ray_solutions(ray, brute_force)

    def check(self, family):
        return json.loads(self._core.check_json(json.dumps(family)))

    def equivalence_witness(self, a, b):
        return self._core.equiv(json.dumps(a), json.dumps(b))

    def char_shift(self, family, character):
        return json.loads(self._core.char_shift_json(json.dumps(family), character))

    def reflect(self, family):
        return json.loads(self._core.reflect_json(json.dumps(family)))

    def orbits(self, cap=1_000_000):
        return self._core.orbits(cap)
