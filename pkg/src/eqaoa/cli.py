"""Command-line experiment runner.

    eqaoa run CONFIG.json [--seed N] [--trials N] [--mode exact|sampled] [--shots M]
    eqaoa compare A B            # result JSON paths or fixture:<graph>/<mixer>
    eqaoa verify [--output report.json]
    eqaoa export-circuit CONFIG.json PARAMS.json [--output circuit.qasm]
    eqaoa graphs

Exit codes: 0 success, 1 verification failure, 2 usage or config error,
3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

import numpy as np

from . import __version__
from .circuits import export_qasm, qaoa_circuit
from .errors import EqaoaError, ResourceLimitError
from .graphs import BUILTIN_GRAPHS, Graph, builtin_graph, max_degree, parse_edge_list
from .mixers import MixerKind
from .objective import ProblemSpec, build_diagonal, edge_coloring_spec, partition_spec
from .schedule import DEFAULT_PMAX, OptimizerSettings, TrialRecord, layerwise_run
from .simulator import DEFAULT_SHOTS, Params
from .stats import SampleSet, fixture, summaries_to_csv, summarize, t_test

__all__ = [
    "ConfigError",
    "ExperimentConfig",
    "CampaignResult",
    "run_campaign",
    "load_result",
    "save_result",
    "main",
]

EXIT_OK, EXIT_VERIFY, EXIT_CONFIG, EXIT_RESOURCE = 0, 1, 2, 3

# graphs whose reference campaigns used a non-default register or problem
_GRAPH_DEFAULTS = {
    "gamma6": {"ell": 3},
    "frakG": {"problem": "partition"},
}


class ConfigError(EqaoaError, ValueError):
    pass


@dataclass
class ExperimentConfig:
    graph: str
    problem: str = "edge_coloring"
    ell: int = 2
    mixer: str = "hm"
    pmax: int | None = None
    mode: str = "sampled"
    shots: int = DEFAULT_SHOTS
    trials: int = 50
    seed: int = 0
    optimizer: OptimizerSettings = field(default_factory=OptimizerSettings)
    penalty: float | None = None
    name: str | None = None
    output_dir: str = "results"
    workers: int = 1

    def __post_init__(self):
        if self.problem not in DEFAULT_PMAX:
            raise ConfigError(f"problem must be one of {sorted(DEFAULT_PMAX)}, got {self.problem!r}")
        try:
            self.mixer = MixerKind.parse(self.mixer).value
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        if self.pmax is None:
            self.pmax = DEFAULT_PMAX[self.problem]
        if self.mode not in ("exact", "sampled"):
            raise ConfigError(f"mode must be 'exact' or 'sampled', got {self.mode!r}")
        for key in ("ell", "pmax", "shots", "trials", "workers"):
            val = getattr(self, key)
            if not isinstance(val, int) or isinstance(val, bool) or val < 1:
                raise ConfigError(f"{key} must be a positive integer, got {val!r}")
        if not isinstance(self.seed, int) or self.seed < 0:
            raise ConfigError(f"seed must be a nonnegative integer, got {self.seed!r}")
        if isinstance(self.optimizer, dict):
            try:
                self.optimizer = OptimizerSettings(**self.optimizer)
            except TypeError as exc:
                raise ConfigError(f"bad optimizer settings: {exc}") from None
        if self.name is None:
            self.name = f"{Path(self.graph).stem}_{self.mixer}_{self.mode}"

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        if "graph" not in data:
            raise ConfigError("config is missing 'graph'")
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        merged = dict(_GRAPH_DEFAULTS.get(data["graph"], {}))
        merged.update(data)
        return cls(**merged)

    @classmethod
    def load(cls, path, **overrides) -> "ExperimentConfig":
        """Read a config file; non-None ``overrides`` replace its keys."""
        try:
            data = json.loads(Path(path).read_text())
        except FileNotFoundError:
            raise ConfigError(f"config file {path} not found") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
        if isinstance(data, dict):
            data.update({k: v for k, v in overrides.items() if v is not None})
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["optimizer"] = self.optimizer.to_dict()
        return out

    def resolve_graph(self) -> Graph:
        if self.graph in BUILTIN_GRAPHS:
            return builtin_graph(self.graph)
        path = Path(self.graph)
        if not path.exists():
            raise ConfigError(f"graph {self.graph!r} is neither a built-in name nor a file")
        return parse_edge_list(path.read_text())

    def problem_spec(self) -> ProblemSpec:
        graph = self.resolve_graph()
        try:
            if self.problem == "edge_coloring":
                return edge_coloring_spec(graph, self.ell)
            return partition_spec(graph, self.ell, self.penalty)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def spec_key(self) -> tuple:
        """What two campaigns must share to be comparable."""
        return (self.graph, self.problem, self.ell, self.penalty)


@dataclass
class CampaignResult:
    config: dict
    trials: list[TrialRecord]
    summary: dict
    version: str = __version__
    wall_clock: float = 0.0

    def final_energies(self) -> SampleSet:
        return SampleSet(self.config["name"], [t.final_energy for t in self.trials])

    def to_dict(self) -> dict:
        return {
            "config": self.config,
            "trials": [t.to_dict() for t in self.trials],
            "summary": self.summary,
            "version": self.version,
            "wall_clock": self.wall_clock,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignResult":
        return cls(
            config=data["config"],
            trials=[TrialRecord.from_dict(t) for t in data["trials"]],
            summary=data["summary"],
            version=data.get("version", ""),
            wall_clock=data.get("wall_clock", 0.0),
        )

    def __eq__(self, other):
        if not isinstance(other, CampaignResult):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def _run_trial(args) -> TrialRecord:
    spec, kind, pmax, mode, seed, shots, settings = args
    return layerwise_run(spec, kind, pmax, mode=mode, seed=seed, shots=shots, settings=settings)


def run_campaign(cfg: ExperimentConfig) -> CampaignResult:
    """Run ``cfg.trials`` independent trials; trial ``i`` uses seed ``cfg.seed + i``."""
    spec = cfg.problem_spec()
    build_diagonal(spec)  # fail fast on the qubit cap before fanning out
    jobs = [
        (spec, cfg.mixer, cfg.pmax, cfg.mode, cfg.seed + i, cfg.shots, cfg.optimizer)
        for i in range(cfg.trials)
    ]
    start = time.perf_counter()
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(_run_trial, jobs))
    else:
        diagonal = build_diagonal(spec)
        records = [
            layerwise_run(spec, cfg.mixer, cfg.pmax, mode=cfg.mode, seed=s, shots=m,
                          settings=opt, diagonal=diagonal)
            for _, _, _, _, s, m, opt in jobs
        ]
    elapsed = time.perf_counter() - start
    energies = SampleSet(cfg.name, [r.final_energy for r in records])
    return CampaignResult(cfg.to_dict(), records, summarize(energies).to_dict(), __version__, elapsed)


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_result(result: CampaignResult, json_path, csv_path=None) -> None:
    _atomic_write(Path(json_path), json.dumps(result.to_dict(), indent=2) + "\n")
    if csv_path is not None:
        _atomic_write(Path(csv_path), summaries_to_csv([summarize(result.final_energies())]))


def load_result(path) -> CampaignResult:
    return CampaignResult.from_dict(json.loads(Path(path).read_text()))


# -- subcommands ----------------------------------------------------------

def cmd_run(args) -> int:
    overrides = {k: getattr(args, k) for k in ("seed", "trials", "mode", "shots", "workers")}
    cfg = ExperimentConfig.load(args.config, **overrides)
    result = run_campaign(cfg)
    out = Path(cfg.output_dir)
    save_result(result, out / f"{cfg.name}.json", out / f"{cfg.name}.csv")
    s = result.summary
    print(
        f"{cfg.name}: {len(result.trials)} trials, mean {s['mean']:.6g}, median {s['median']:.6g}, "
        f"min {s['min']:.6g}, below 1: {s['below_threshold']}/{s['count']} "
        f"({result.wall_clock:.1f} s) -> {out / (cfg.name + '.json')}"
    )
    return EXIT_OK


def _fixture_source(ref: str):
    body = ref.split(":", 1)[1]
    try:
        graph, mixer = body.split("/")
        samples = fixture(graph, mixer)
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"bad fixture reference {ref!r}: {exc}") from None
    defaults = {"graph": graph, **_GRAPH_DEFAULTS.get(graph, {})}
    cfg = ExperimentConfig.from_dict(defaults)
    return samples, cfg.spec_key()


def _load_source(ref: str):
    if ref.startswith("fixture:"):
        return _fixture_source(ref)
    try:
        result = load_result(ref)
    except FileNotFoundError:
        raise ConfigError(f"result file {ref} not found") from None
    except (json.JSONDecodeError, KeyError) as exc:
        raise ConfigError(f"{ref} is not a campaign result: {exc}") from None
    cfg = ExperimentConfig.from_dict(result.config)
    samples = SampleSet(ref, [t.final_energy for t in result.trials])
    return samples, cfg.spec_key()


def compare(a: SampleSet, b: SampleSet) -> dict:
    return {
        "a": summarize(a).to_dict(),
        "b": summarize(b).to_dict(),
        "tests": [t_test(a, b, v).to_dict() for v in ("pooled", "welch")],
    }


def cmd_compare(args) -> int:
    a, key_a = _load_source(args.a)
    b, key_b = _load_source(args.b)
    if key_a != key_b:
        raise ConfigError(f"problem specs differ: {key_a} vs {key_b}")
    report = compare(a, b)
    for side in ("a", "b"):
        s = report[side]
        print(f"{s['label']}: n={s['count']} mean={s['mean']:.6g} median={s['median']:.6g} min={s['min']:.6g}")
    for t in report["tests"]:
        print(f"{t['variant']}: t={t['t']:.6g} df={t['df']:.6g} p={t['p_two_sided']:.6g}")
    if args.output:
        _atomic_write(Path(args.output), json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verification import run_suite

    checks = run_suite(seed=args.seed)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.name}")
    report = {"passed": all(c.passed for c in checks), "checks": [c.to_dict() for c in checks]}
    text = json.dumps(report, indent=2, default=_jsonable) + "\n"
    if args.output:
        _atomic_write(Path(args.output), text)
    return EXIT_OK if report["passed"] else EXIT_VERIFY


def _jsonable(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _load_params(path) -> Params:
    try:
        data = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise ConfigError(f"params file {path} not found") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"params file {path} is not valid JSON: {exc}") from None
    if "final_params" in data:
        data = data["final_params"]
    try:
        return Params(gammas=data["gammas"], betas=data["betas"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"params file needs 'gammas' and 'betas' lists: {exc}") from None


def cmd_export_circuit(args) -> int:
    cfg = ExperimentConfig.load(args.config)
    params = _load_params(args.params)
    spec = cfg.problem_spec()
    text = export_qasm(qaoa_circuit(spec, cfg.mixer, params))
    if args.output:
        _atomic_write(Path(args.output), text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_graphs(args) -> int:
    print(f"{'name':8} {'n':>3} {'m':>3} {'maxdeg':>6}  defaults")
    for name in BUILTIN_GRAPHS:
        g = builtin_graph(name)
        cfg = ExperimentConfig.from_dict({"graph": name})
        print(f"{name:8} {g.num_vertices:3d} {g.num_edges:3d} {max_degree(g):6d}  {cfg.problem}, ell={cfg.ell}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eqaoa", description="Equivariant-mixer QAOA experiments.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run a campaign from a JSON config")
    r.add_argument("config")
    r.add_argument("--seed", type=int)
    r.add_argument("--trials", type=int)
    r.add_argument("--mode", choices=["exact", "sampled"])
    r.add_argument("--shots", type=int)
    r.add_argument("--workers", type=int)
    r.set_defaults(func=cmd_run)

    c = sub.add_parser("compare", help="summaries and t-tests of two campaigns")
    c.add_argument("a", help="result JSON or fixture:<graph>/<mixer>")
    c.add_argument("b", help="result JSON or fixture:<graph>/<mixer>")
    c.add_argument("--output")
    c.set_defaults(func=cmd_compare)

    v = sub.add_parser("verify", help="run the symmetry and circuit checks")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--output")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("export-circuit", help="emit an OpenQASM 2.0 circuit")
    e.add_argument("config")
    e.add_argument("params", help="JSON with 'gammas' and 'betas' (or a trial record)")
    e.add_argument("--output")
    e.set_defaults(func=cmd_export_circuit)

    g = sub.add_parser("graphs", help="list built-in graphs")
    g.set_defaults(func=cmd_graphs)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ConfigError, EqaoaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
