"""
输入清单（JSON）

{
  "ring": ["x", "y", "z"],
  "ideal": ["x^2", "(x+y)^2", "(x+y+z)^2"],
  "z": "z",
  "tasks": ["hilbert", {"name": "tensor", "alpha_max": 3}],
  "seed": 0, "trials": 8, "coeff_bound": 1000
}
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from artinian import LinearForm
from errors import ManifestError, ToolkitError
from groebner import IdealHandle
from logger import get_logger
from poly_parser import parse
from polyring import Polynomial, VariableSet

logger = get_logger(__name__)

_KNOWN_KEYS = ('ring', 'ideal', 'z', 'tasks', 'seed', 'trials', 'coeff_bound')


@dataclass
class TaskSpec:
    name: str
    params: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'name': self.name}
        data.update(self.params)
        return data


@dataclass
class Manifest:
    variables: VariableSet
    ideal_text: List[str]
    generators: List[Polynomial]
    z_text: Optional[str] = None
    z: Optional[LinearForm] = None
    tasks: List[TaskSpec] = field(default_factory=list)
    seed: Optional[int] = None
    trials: Optional[int] = None
    coeff_bound: Optional[int] = None

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Manifest':
        if not isinstance(data, dict):
            raise ManifestError("manifest must be a JSON object")
        unknown = [k for k in data if k not in _KNOWN_KEYS]
        if unknown:
            raise ManifestError(f"unknown manifest keys: {unknown}")
        ring = data.get('ring')
        if not isinstance(ring, list) or not ring or not all(isinstance(v, str) for v in ring):
            raise ManifestError("'ring' must be a nonempty list of variable names")
        variables = VariableSet(ring)
        texts = data.get('ideal', [])
        if not isinstance(texts, list) or not all(isinstance(t, str) for t in texts):
            raise ManifestError("'ideal' must be a list of polynomial strings")
        generators = [parse(t, variables) for t in texts]
        manifest = cls(variables, list(texts), generators)
        if data.get('z') is not None:
            manifest.set_z(data['z'])
        manifest.tasks = [cls._task(t) for t in data.get('tasks', [])]
        for key in ('seed', 'trials', 'coeff_bound'):
            value = data.get(key)
            if value is not None and not isinstance(value, int):
                raise ManifestError(f"'{key}' must be an integer")
            setattr(manifest, key, value)
        return manifest

    @classmethod
    def from_file(cls, path: str) -> 'Manifest':
        try:
            with open(path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ManifestError(f"cannot read manifest {path}: {e}", path=path)
        logger.info(f"loaded manifest {path}")
        return cls.from_dict(data)

    @staticmethod
    def _task(entry) -> TaskSpec:
        if isinstance(entry, str):
            return TaskSpec(entry)
        if isinstance(entry, dict) and isinstance(entry.get('name'), str):
            params = {k: v for k, v in entry.items() if k != 'name'}
            return TaskSpec(entry['name'], params)
        raise ManifestError(f"malformed task entry {entry!r}")

    def set_z(self, text: str):
        poly = parse(text, self.variables)
        try:
            self.z = LinearForm.from_polynomial(poly)
        except ToolkitError as e:
            raise ManifestError(f"z must be a nonzero linear form: {e.message}", z=text)
        self.z_text = text

    def ideal(self) -> IdealHandle:
        return IdealHandle(self.variables, self.generators)

    def echo(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {'ring': list(self.variables.names), 'ideal': list(self.ideal_text)}
        if self.z_text is not None:
            data['z'] = self.z_text
        if self.tasks:
            data['tasks'] = [t.to_dict() for t in self.tasks]
        for key in ('seed', 'trials', 'coeff_bound'):
            if getattr(self, key) is not None:
                data[key] = getattr(self, key)
        return data
