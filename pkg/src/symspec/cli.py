"""Command-line reports over the spectral engine.

Subcommands: analyze (per-representation summary and checks), compare
(side-by-side table plus SNR ratio lines), verify (identity checks on input
or seeded random sequences), spectrum (plot-ready per-bin CSV).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import spectral
from .representations import (
    MatrixError,
    RepresentationMatrix,
    apply_representation,
    build_helmert,
    build_indicators,
    build_tetrahedron,
    build_zcurve,
    load_matrix,
)
from .sequences import (
    Alphabet,
    SequenceError,
    SymbolicSequence,
    default_alphabet,
    parse_fasta,
    random_sequence,
)

__all__ = ["build_parser", "main", "entry"]

_RANDOM_M_RANGE = (1, 2000)

_TOTALS_NOTE = (
    "total spectra are exact identity values: m^2 for base, "
    "d^2*(T-1)/T*m^2 for channel transforms"
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symspec",
        description="Fourier power spectra and signal-to-noise ratios of symbolic sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--input", "-i", metavar="PATH|-", default="-",
            help="FASTA or plain-text sequence file; '-' reads stdin (default)",
        )
        sp.add_argument(
            "--alphabet", metavar="STR|auto", default="auto",
            help="explicit ordered symbols (e.g. ACGT) or 'auto' to infer",
        )
        sp.add_argument(
            "--rep", action="append", dest="reps", metavar="NAME",
            help="base|zcurve|tetrahedron|helmert|file:PATH (repeatable)",
        )
        sp.add_argument(
            "--period", type=int, default=3, metavar="N",
            help="periodicity of interest (default 3)",
        )
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--output", "-o", metavar="PATH|-", default="-")

    sp = sub.add_parser("analyze", help="spectrum summary and identity checks per representation")
    add_common(sp)
    sp = sub.add_parser("compare", help="side-by-side table for two or more representations")
    add_common(sp)
    sp = sub.add_parser("verify", help="check the spectral identities on input or random sequences")
    add_common(sp)
    sp.add_argument(
        "--random", type=int, default=0, metavar="N",
        help=f"verify N seeded random sequences (m in {list(_RANDOM_M_RANGE)}) instead of reading input",
    )
    sp.add_argument("--seed", type=int, default=0, metavar="S")
    sp.add_argument(
        "--alphabet-size", type=int, default=4, metavar="T", dest="alphabet_size",
        help="alphabet size for --random (4 = DNA, 20 = amino acids)",
    )
    sp = sub.add_parser("spectrum", help="plot-ready CSV of the power/SNR profile")
    add_common(sp)
    return parser


# -- shared helpers ----------------------------------------------------------


def _fmt_power(x: float) -> str:
    r = round(x)
    if abs(x - r) <= 1e-6:
        return str(int(r))
    return f"{x:.6g}"


def _fmt_snr(x: float) -> str:
    return f"{x:.4f}"


def _passfail(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def _write(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")


def _check_period(args) -> None:
    if args.period < 2:
        raise ValueError(f"period must be at least 2, got {args.period}")


def _read_input(args) -> tuple[str, str]:
    if args.input in (None, "-"):
        return sys.stdin.read(), "-"
    path = Path(args.input)
    return path.read_text(encoding="utf-8"), str(path)


def _load_many(args) -> tuple[list[SymbolicSequence], str]:
    text, label = _read_input(args)
    alphabet = None if args.alphabet == "auto" else Alphabet(tuple(args.alphabet.upper()))
    try:
        seqs = parse_fasta(text, alphabet)
    except SequenceError as exc:
        raise SequenceError(f"{label}: {exc}") from None
    return seqs, label


def _load_single(args) -> tuple[SymbolicSequence, str]:
    seqs, label = _load_many(args)
    if len(seqs) != 1:
        raise SequenceError(
            f"{label}: input has {len(seqs)} records; this command analyzes exactly one"
        )
    return seqs[0], label


def _resolve_rep(name: str, alphabet: Alphabet) -> RepresentationMatrix | None:
    """None stands for the base (indicator) representation."""
    if name == "base":
        return None
    if name == "zcurve":
        return build_zcurve()
    if name == "tetrahedron":
        return build_tetrahedron()
    if name == "helmert":
        return build_helmert(alphabet.size)
    if name.startswith("file:"):
        return load_matrix(name[len("file:"):])
    raise ValueError(f"unknown representation {name!r}")


def _analysis_entry(ind, rep: RepresentationMatrix | None, period: int):
    """Report dict for one representation: summary, peak, identity checks."""
    m = ind.m
    T = ind.alphabet.size
    if rep is None:
        report = spectral.spectrum_base(ind)
        name = "base"
        expected_total = float(m) ** 2
        ratio = None
    else:
        report = spectral.spectrum_transformed(apply_representation(ind, rep))
        name = rep.name
        expected_total = rep.d**2 * (T - 1) / T * float(m) ** 2
        ratio = spectral.snr_ratio_check(ind, rep)

    total_pass = abs(report.total - expected_total) <= spectral.IDENTITY_RTOL * expected_total
    if period <= m:
        peak = spectral.periodicity_query(report, period)
        peak_dict = {"k": peak.k, "exact": peak.exact, "power": peak.power, "snr": peak.snr}
    else:
        peak_dict = None

    if ratio is None:
        # Base against itself: the reference ratio is identically 1.
        ratio_dict = {
            "expected": 1.0, "max_dev": 0.0,
            "checked_bins": m - 1, "skipped_bins": 0,
            "vacuous": False, "pass": True,
        }
    else:
        ratio_dict = {
            "expected": ratio.expected,
            "max_dev": None if ratio.vacuous else ratio.max_deviation,
            "checked_bins": ratio.checked_bins,
            "skipped_bins": ratio.skipped_bins,
            "vacuous": ratio.vacuous,
            "pass": ratio.passed(),
        }

    entry = {
        "name": name,
        "d": None if rep is None else float(rep.d),
        "total": float(report.total),
        "mean_noise": float(report.mean_noise),
        "peak": peak_dict,
        "theorem_checks": {
            "total_spectrum": {
                "expected": float(expected_total),
                "measured": float(report.total),
                "pass": bool(total_pass),
            },
            "snr_ratio": ratio_dict,
        },
    }
    return entry, report


def _entry_checks_pass(entry) -> bool:
    checks = entry["theorem_checks"]
    return checks["total_spectrum"]["pass"] and checks["snr_ratio"]["pass"]


def _profile_csv(named_reports, with_rep_column: bool) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["k", "frequency", "power", "snr"]
    writer.writerow((["representation"] + header) if with_rep_column else header)
    for name, report in named_reports:
        m = report.m
        for k in range(1, m):
            row = [k, k / m, float(report.power[k]), float(report.snr[k - 1])]
            writer.writerow(([name] + row) if with_rep_column else row)
    return buf.getvalue()


# -- analyze -----------------------------------------------------------------


def cmd_analyze(args) -> int:
    _check_period(args)
    seq, label = _load_single(args)
    ind = build_indicators(seq)
    rep_names = args.reps or ["base"]
    entries = []
    reports = []
    for rep_name in rep_names:
        rep = _resolve_rep(rep_name, seq.alphabet)
        entry, report = _analysis_entry(ind, rep, args.period)
        entries.append(entry)
        reports.append(report)

    notes = [_TOTALS_NOTE]
    if args.period > seq.m:
        notes.append(f"period {args.period} exceeds sequence length {seq.m}; no peak bin")

    if args.format == "json":
        obj = {
            "input": label,
            "record": seq.id,
            "m": seq.m,
            "alphabet": str(seq.alphabet),
            "period": args.period,
            "representations": entries,
            "notes": notes,
        }
        _write(args, _json_text(obj))
    elif args.format == "csv":
        _write(args, _profile_csv([(e["name"], r) for e, r in zip(entries, reports)], True))
    else:
        lines = [
            f"input: {label}" + (f" (record {seq.id!r})" if seq.id else ""),
            f"m = {seq.m}   alphabet = {seq.alphabet} (T = {seq.alphabet.size})   period = {args.period}",
            "",
        ]
        for entry in entries:
            d = entry["d"]
            lines.append(entry["name"] if d is None else f"{entry['name']} (d = {_fmt_power(d)})")
            tc = entry["theorem_checks"]["total_spectrum"]
            lines.append(
                f"  total spectrum : {_fmt_power(entry['total'])}"
                f"   (identity {_fmt_power(tc['expected'])}, {_passfail(tc['pass'])})"
            )
            lines.append(f"  mean noise     : {_fmt_power(entry['mean_noise'])}")
            if entry["peak"] is None:
                lines.append(f"  peak           : none (period {args.period} exceeds m = {seq.m})")
            else:
                pk = entry["peak"]
                tag = "exact" if pk["exact"] else "rounded, not exact"
                lines.append(
                    f"  peak           : k = {pk['k']} (m/{args.period} {tag})"
                    f"   power = {_fmt_power(pk['power'])}   snr = {_fmt_snr(pk['snr'])}"
                )
            sr = entry["theorem_checks"]["snr_ratio"]
            if sr["vacuous"]:
                lines.append("  snr ratio      : vacuous (no nonzero base bins)")
            else:
                lines.append(
                    f"  snr ratio      : expected {_fmt_snr(sr['expected'])}"
                    f"   max dev {sr['max_dev']:.3g}   {_passfail(sr['pass'])}"
                )
            lines.append("")
        lines.extend(f"note: {note}" for note in notes)
        _write(args, "\n".join(lines))

    return 0 if all(_entry_checks_pass(e) for e in entries) else 1


# -- compare -----------------------------------------------------------------


def cmd_compare(args) -> int:
    _check_period(args)
    seq, label = _load_single(args)
    rep_names = args.reps or []
    if len(rep_names) < 2:
        raise ValueError("compare needs at least two --rep selections")
    ind = build_indicators(seq)
    entries = []
    reports = []
    for rep_name in rep_names:
        rep = _resolve_rep(rep_name, seq.alphabet)
        entry, report = _analysis_entry(ind, rep, args.period)
        entries.append(entry)
        reports.append(report)

    T = seq.alphabet.size
    amplification = [1.0 if e["d"] is None else T / (T - 1.0) for e in entries]
    ref = entries[0]
    peak_k = ref["peak"]["k"] if ref["peak"] else None

    ratios = []
    for idx, entry in enumerate(entries[1:], start=1):
        theoretical = amplification[idx] / amplification[0]
        if peak_k is None or ref["peak"]["snr"] <= spectral.BASE_SNR_FLOOR:
            measured = None
        else:
            measured = entry["peak"]["snr"] / ref["peak"]["snr"]
        ratios.append(
            {
                "method": entry["name"],
                "reference": ref["name"],
                "measured": measured,
                "theoretical": theoretical,
                "indeterminate": measured is None,
            }
        )

    notes = [_TOTALS_NOTE]
    if peak_k is None:
        notes.append(f"period {args.period} exceeds sequence length {seq.m}; no peak bin")

    def peak_cell(entry, field):
        return entry["peak"][field] if entry["peak"] else None

    if args.format == "json":
        obj = {
            "input": label,
            "record": seq.id,
            "m": seq.m,
            "alphabet": str(seq.alphabet),
            "period": args.period,
            "methods": [
                {
                    "method": e["name"],
                    "length": seq.m,
                    "total_spectra": e["total"],
                    "mean_noise": e["mean_noise"],
                    "periodicity_power": peak_cell(e, "power"),
                    "periodicity_snr": peak_cell(e, "snr"),
                    "peak_k": peak_cell(e, "k"),
                    "peak_exact": peak_cell(e, "exact"),
                }
                for e in entries
            ],
            "ratios": ratios,
            "notes": notes,
        }
        _write(args, _json_text(obj))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["method", "length", "total_spectra", "mean_noise",
             "periodicity_power", "periodicity_snr",
             "snr_ratio_measured", "snr_ratio_theoretical"]
        )
        for idx, entry in enumerate(entries):
            r = ratios[idx - 1] if idx >= 1 else None
            writer.writerow(
                [
                    entry["name"], seq.m, entry["total"], entry["mean_noise"],
                    peak_cell(entry, "power"), peak_cell(entry, "snr"),
                    "" if r is None or r["measured"] is None else r["measured"],
                    "" if r is None else r["theoretical"],
                ]
            )
        _write(args, buf.getvalue())
    else:
        names = [e["name"] for e in entries]
        def row(label_, cells):
            return [label_] + cells
        table = [
            row("Method", names),
            row("Length", [str(seq.m)] * len(entries)),
            row("Total Spectra", [_fmt_power(e["total"]) for e in entries]),
            row("Mean Noise", [_fmt_power(e["mean_noise"]) for e in entries]),
            row(
                f"{args.period}-Periodicity",
                ["n/a" if e["peak"] is None else _fmt_power(e["peak"]["power"]) for e in entries],
            ),
            row("SNR", ["n/a" if e["peak"] is None else _fmt_snr(e["peak"]["snr"]) for e in entries]),
        ]
        widths = [max(len(r[i]) for r in table) for i in range(len(table[0]))]
        lines = [
            f"input: {label}" + (f" (record {seq.id!r})" if seq.id else "")
            + f"   alphabet = {seq.alphabet} (T = {T})",
            "",
        ]
        lines.extend(
            "  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in table
        )
        lines.append("")
        for r in ratios:
            head = f"SNR ratio ({r['method']} / {r['reference']}):"
            if r["indeterminate"]:
                lines.append(f"{head} indeterminate (reference peak SNR is 0)"
                             f"   theoretical {_fmt_snr(r['theoretical'])}")
            else:
                lines.append(f"{head} measured {_fmt_snr(r['measured'])}"
                             f"   theoretical {_fmt_snr(r['theoretical'])}")
        lines.extend(f"note: {note}" for note in notes)
        _write(args, "\n".join(lines))

    return 0 if all(_entry_checks_pass(e) for e in entries) else 1


# -- verify ------------------------------------------------------------------


def cmd_verify(args) -> int:
    tol = spectral.IDENTITY_RTOL
    if args.random:
        if args.random < 1:
            raise ValueError("--random needs a positive count")
        alphabet = default_alphabet(args.alphabet_size)
        rng = np.random.default_rng(args.seed)
        lo, hi = _RANDOM_M_RANGE
        seqs = [
            random_sequence(alphabet, int(rng.integers(lo, hi + 1)), rng, id=f"random-{i:03d}")
            for i in range(args.random)
        ]
        label = None
    else:
        seqs, label = _load_many(args)
        alphabet = seqs[0].alphabet

    rep_names = args.reps
    if not rep_names:
        is_dna = set(alphabet.symbols) == set("ACGT")
        rep_names = ["zcurve", "tetrahedron", "helmert"] if is_dna else ["helmert"]
    if "base" in rep_names:
        raise ValueError(
            "verify checks channel transforms against the implicit base representation; "
            "--rep base is not a transform"
        )
    reps = [(name, _resolve_rep(name, alphabet)) for name in rep_names]

    results = []
    all_pass = True
    for i, seq in enumerate(seqs):
        ind = build_indicators(seq)
        tot = spectral.verify_total_spectrum(ind)
        seq_result = {
            "id": seq.id or f"record-{i:03d}",
            "m": seq.m,
            "total_spectrum": {
                "expected": tot.expected,
                "measured": tot.measured,
                "relative_error": tot.relative_error,
                "pass": tot.passed(),
            },
            "snr_ratio": [],
        }
        all_pass = all_pass and tot.passed()
        for name, rep in reps:
            rc = spectral.snr_ratio_check(ind, rep)
            seq_result["snr_ratio"].append(
                {
                    "representation": name,
                    "expected": rc.expected,
                    "max_dev": None if rc.vacuous else rc.max_deviation,
                    "checked_bins": rc.checked_bins,
                    "skipped_bins": rc.skipped_bins,
                    "vacuous": rc.vacuous,
                    "pass": rc.passed(),
                }
            )
            all_pass = all_pass and rc.passed()
        results.append(seq_result)

    n_pass = sum(
        1 for r in results
        if r["total_spectrum"]["pass"] and all(s["pass"] for s in r["snr_ratio"])
    )

    if args.format == "json":
        obj = {
            "command": "verify",
            "mode": "random" if args.random else "input",
            "count": len(seqs),
            "alphabet": str(alphabet),
            "alphabet_size": alphabet.size,
            "representations": list(rep_names),
            "tolerance": tol,
            "results": results,
            "all_pass": all_pass,
        }
        if args.random:
            obj["seed"] = args.seed
            obj["m_range"] = list(_RANDOM_M_RANGE)
        else:
            obj["input"] = label
        _write(args, _json_text(obj))
    elif args.format == "csv":
        raise ValueError("verify supports --format text or json")
    else:
        lines = []
        if args.random:
            lo, hi = _RANDOM_M_RANGE
            lines.append(
                f"verify: {len(seqs)} random sequences over {alphabet} "
                f"(T = {alphabet.size}), seed = {args.seed}, m in [{lo}, {hi}]"
            )
        else:
            lines.append(
                f"verify: {len(seqs)} sequence(s) from {label} over {alphabet} (T = {alphabet.size})"
            )
        lines.append(
            "transforms: " + ", ".join(rep_names) + f"   tolerance: {tol:g} relative"
        )
        lines.append("")
        for r in results:
            parts = [
                f"total-spectrum {_passfail(r['total_spectrum']['pass'])}"
                f" (rel err {r['total_spectrum']['relative_error']:.3g})"
            ]
            for s in r["snr_ratio"]:
                if s["vacuous"]:
                    parts.append(f"{s['representation']} PASS vacuous (no nonzero base bins)")
                else:
                    parts.append(
                        f"{s['representation']} {_passfail(s['pass'])} (max dev {s['max_dev']:.3g})"
                    )
            lines.append(f"{r['id']} (m = {r['m']}): " + " | ".join(parts))
        lines.append("")
        lines.append(f"result: {_passfail(all_pass)} ({n_pass}/{len(seqs)} sequences)")
        _write(args, "\n".join(lines))

    return 0 if all_pass else 1


# -- spectrum ----------------------------------------------------------------


def cmd_spectrum(args) -> int:
    _check_period(args)
    seq, label = _load_single(args)
    rep_names = args.reps or ["base"]
    if len(rep_names) != 1:
        raise ValueError("spectrum needs exactly one --rep selection")
    rep = _resolve_rep(rep_names[0], seq.alphabet)
    ind = build_indicators(seq)
    if rep is None:
        report = spectral.spectrum_base(ind)
    else:
        report = spectral.spectrum_transformed(apply_representation(ind, rep))

    if args.format == "json":
        m = report.m
        obj = {
            "input": label,
            "record": seq.id,
            "m": m,
            "representation": report.representation,
            "k": list(range(1, m)),
            "frequency": [k / m for k in range(1, m)],
            "power": [float(v) for v in report.power[1:]],
            "snr": [float(v) for v in report.snr],
        }
        _write(args, _json_text(obj))
    else:
        _write(args, _profile_csv([(report.representation, report)], False))
    return 0


_COMMANDS = {
    "analyze": cmd_analyze,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (SequenceError, MatrixError, ValueError, OSError) as exc:
        print(f"symspec: error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
