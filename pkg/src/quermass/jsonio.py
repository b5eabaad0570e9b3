"""JSON schemas for bodies and functions.

Bodies:
  {"type": "interval", "a": ..., "b": ...}
  {"type": "polygon", "vertices": [[x, y], ...]}
  {"type": "polytope3", "vertices": [[x, y, z], ...]}
  {"type": "ball", "dim": n, "center": [...], "radius": r}
  {"type": "parallel", "base": {...}, "rho": r}     (outer parallel body)

Functions:
  {"type": "layered", "levels": [{"t": ..., "body": {...}}, ...]}
  {"type": "radial", "dim": n, "profile": {...}}
  {"type": "char", "height": c, "body": {...}}
  {"type": "exp-neg-support", "body": {...}}

Profiles: {"kind": "exp", "rate": a, "scale": c} |
          {"kind": "gauss", "scale": c, "width": w} |
          {"kind": "steps", "points": [[r, F], ...]} |
          {"kind": "powercut", "scale": c, "radius": R, "exponent": p}

Emitted JSON re-parses to an equal object (round-trip invariant).
"""

from __future__ import annotations

import json

import numpy as np

from .geometry import Ball, ConvexBody, Interval, ParallelBody, Polygon, Polytope3
from .qcfun import (CharFn, ExpNegSupportFn, ExpProfile, GaussProfile,
                    LayeredFn, PowerCutProfile, Profile, QCFunction, RadialFn,
                    StepsProfile)


class SchemaError(ValueError):
    pass


def _need(d: dict, key: str):
    if key not in d:
        raise SchemaError(f"missing key {key!r} in {sorted(d)}")
    return d[key]


def body_to_dict(K: ConvexBody) -> dict:
    if isinstance(K, Interval):
        return {"type": "interval", "a": K.a, "b": K.b}
    if isinstance(K, Polygon):
        return {"type": "polygon", "vertices": K.vertices.tolist()}
    if isinstance(K, Polytope3):
        return {"type": "polytope3", "vertices": K.vertices.tolist()}
    if isinstance(K, Ball):
        return {"type": "ball", "dim": K.n, "center": K.center.tolist(),
                "radius": K.radius}
    if isinstance(K, ParallelBody):
        return {"type": "parallel", "base": body_to_dict(K.base), "rho": K.rho}
    raise SchemaError(f"unserializable body {type(K).__name__}")


def body_from_dict(d: dict) -> ConvexBody:
    kind = _need(d, "type")
    try:
        if kind == "interval":
            return Interval(float(_need(d, "a")), float(_need(d, "b")))
        if kind == "polygon":
            return Polygon(np.asarray(_need(d, "vertices"), dtype=float))
        if kind == "polytope3":
            return Polytope3(np.asarray(_need(d, "vertices"), dtype=float))
        if kind == "ball":
            return Ball(int(_need(d, "dim")),
                        np.asarray(_need(d, "center"), dtype=float),
                        float(_need(d, "radius")))
        if kind == "parallel":
            return ParallelBody(body_from_dict(_need(d, "base")),
                                float(_need(d, "rho")))
    except SchemaError:
        raise
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"invalid {kind} body: {exc}") from exc
    raise SchemaError(f"unknown body type {kind!r}")


def profile_to_dict(p: Profile) -> dict:
    if isinstance(p, ExpProfile):
        return {"kind": "exp", "rate": p.rate, "scale": p.scale}
    if isinstance(p, GaussProfile):
        return {"kind": "gauss", "scale": p.scale, "width": p.width}
    if isinstance(p, StepsProfile):
        return {"kind": "steps", "points": [[r, F] for r, F in zip(p.rs, p.fs)]}
    if isinstance(p, PowerCutProfile):
        return {"kind": "powercut", "scale": p.scale, "radius": p.radius,
                "exponent": p.exponent}
    raise SchemaError(f"unserializable profile {type(p).__name__}")


def profile_from_dict(d: dict) -> Profile:
    kind = _need(d, "kind")
    try:
        if kind == "exp":
            return ExpProfile(float(_need(d, "rate")), float(d.get("scale", 1.0)))
        if kind == "gauss":
            return GaussProfile(float(d.get("scale", 1.0)), float(d.get("width", 1.0)))
        if kind == "steps":
            pts = _need(d, "points")
            return StepsProfile(tuple(float(r) for r, _ in pts),
                                tuple(float(F) for _, F in pts))
        if kind == "powercut":
            return PowerCutProfile(float(_need(d, "scale")),
                                   float(_need(d, "radius")),
                                   float(_need(d, "exponent")))
    except SchemaError:
        raise
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"invalid {kind} profile: {exc}") from exc
    raise SchemaError(f"unknown profile kind {kind!r}")


def fn_to_dict(f: QCFunction) -> dict:
    if isinstance(f, LayeredFn):
        return {"type": "layered",
                "levels": [{"t": t, "body": body_to_dict(b)}
                           for t, b in zip(f.levels, f.bodies)]}
    if isinstance(f, RadialFn):
        return {"type": "radial", "dim": f.n,
                "profile": profile_to_dict(f.profile)}
    if isinstance(f, CharFn):
        return {"type": "char", "height": f.height, "body": body_to_dict(f.body)}
    if isinstance(f, ExpNegSupportFn):
        return {"type": "exp-neg-support", "body": body_to_dict(f.body)}
    raise SchemaError(f"unserializable function {type(f).__name__}")


def fn_from_dict(d: dict) -> QCFunction:
    kind = _need(d, "type")
    try:
        if kind == "layered":
            rows = _need(d, "levels")
            levels = tuple(float(_need(r, "t")) for r in rows)
            bodies = tuple(body_from_dict(_need(r, "body")) for r in rows)
            return LayeredFn(levels, bodies)
        if kind == "radial":
            return RadialFn(int(_need(d, "dim")),
                            profile_from_dict(_need(d, "profile")))
        if kind == "char":
            return CharFn(float(_need(d, "height")),
                          body_from_dict(_need(d, "body")))
        if kind == "exp-neg-support":
            return ExpNegSupportFn(body_from_dict(_need(d, "body")))
    except SchemaError:
        raise
    except (ValueError, TypeError) as exc:
        raise SchemaError(f"invalid {kind} function: {exc}") from exc
    raise SchemaError(f"unknown function type {kind!r}")


def load_fn(path: str) -> QCFunction:
    with open(path) as fh:
        return fn_from_dict(json.load(fh))


def load_body(path: str) -> ConvexBody:
    with open(path) as fh:
        return body_from_dict(json.load(fh))


def dump(obj, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")
