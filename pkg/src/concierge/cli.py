"""Command-line entry points.

``concierge`` drives the dialog loop (interactive REPL, one-shot turn,
or the HTTP service); ``fpn`` gives standalone access to the fuzzy
Petri net engine (run a net on a marking, or dump it as DOT).  Both
are thin shells over the same library calls the service uses.
"""

from __future__ import annotations

import argparse
import json
import socket
import sys
from pathlib import Path

from concierge.dialog import DialogEngine, TurnResult
from concierge.errors import ConciergeError
from concierge.fpn import ReasoningConfig, export_dot, marking_from_json, net_from_json, run
from concierge.service.app import ADDR_ENV, create_app, resolve_data_dir, turn_response
from concierge.store.bundle import load_bundle
from concierge.store.sessions import SessionState, SessionStore


def _print_turn(result: TurnResult) -> None:
    emotion = result.emotion.emotion.value if result.emotion.emotion else "none"
    print(f"emotion: {emotion} ({result.emotion.valence.value}, {result.emotion.intensity:.3f})")
    print(f"mood:    {result.mood}")
    if result.recommendations:
        print("recommendations:")
        for rec in result.recommendations:
            print(f"  [{rec.kind}] {rec.name}  strength={rec.strength:.3f}  ({rec.rationale})")
    if result.taboo:
        print("taboo:   " + ", ".join(result.taboo))
    print(f"rules:   {', '.join(result.fired_rules) or '-'}")
    print(f"reply:   {result.reply}")


def _session_state_json(state: SessionState) -> str:
    return json.dumps(state.to_dict(), indent=2)


def cmd_repl(args) -> int:
    bundle = load_bundle(resolve_data_dir(args.data))
    engine = DialogEngine(bundle, threshold=args.threshold)
    store = SessionStore(args.sessions or resolve_data_dir(args.data).parent / "sessions")
    state = store.create(person_id=args.person, mood=bundle.mstn.initial_state)
    print(f"session {state.session_id} started; :state shows state, :quit leaves")
    while True:
        try:
            print("> ", end="", flush=True)
            line = sys.stdin.readline()
        except KeyboardInterrupt:
            print()
            return 0
        if not line:
            return 0
        line = line.strip()
        if not line:
            continue
        if line in (":quit", ":q", ":exit"):
            return 0
        if line == ":state":
            print(_session_state_json(state))
            continue
        try:
            result = engine.run_turn(state, line)
        except ConciergeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            continue
        store.save(state)
        store.append_turn(state.session_id, state.history[-1])
        _print_turn(result)


def cmd_once(args) -> int:
    bundle = load_bundle(resolve_data_dir(args.data))
    engine = DialogEngine(bundle, threshold=args.threshold)
    state = SessionState(session_id="once", person_id=args.person, mood=bundle.mstn.initial_state)
    result = engine.run_turn(state, args.text)
    if args.json:
        print(turn_response(result).model_dump_json(indent=2))
    else:
        _print_turn(result)
    return 0


def cmd_serve(args) -> int:
    import os

    host, _, port_text = (args.addr or os.environ.get(ADDR_ENV) or "127.0.0.1:8000").rpartition(":")
    host = host or "127.0.0.1"
    try:
        port = int(port_text)
    except ValueError:
        print(f"error: bad address {args.addr!r}, expected host:port", file=sys.stderr)
        return 1
    app = create_app(resolve_data_dir(args.data), sessions_dir=args.sessions, threshold=args.threshold)
    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError as exc:
        print(f"error: cannot listen on {host}:{port} ({exc})", file=sys.stderr)
        return 1
    finally:
        probe.close()

    import uvicorn

    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data", help=f"data directory (default: $CONCIERGE_DATA or packaged sample)")
    parser.add_argument("--person", help="person id for personal favorite values")
    parser.add_argument(
        "--lambda",
        dest="threshold",
        type=float,
        default=0.1,
        help="reasoning threshold in [0,1] (default 0.1)",
    )


def concierge_main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="concierge", description="emotion-oriented tourist concierge")
    sub = parser.add_subparsers(dest="command", required=True)

    repl = sub.add_parser("repl", help="interactive dialog loop")
    _add_common(repl)
    repl.add_argument("--sessions", help="session directory (default: sibling of data dir)")
    repl.set_defaults(func=cmd_repl)

    once = sub.add_parser("once", help="evaluate a single utterance")
    _add_common(once)
    once.add_argument("--text", required=True, help="utterance text")
    once.add_argument("--json", action="store_true", help="machine-readable output")
    once.set_defaults(func=cmd_once)

    serve = sub.add_parser("serve", help="run the HTTP session service")
    _add_common(serve)
    serve.add_argument("--addr", help=f"host:port (default: ${ADDR_ENV} or 127.0.0.1:8000)")
    serve.add_argument("--sessions", help="session directory (default: sibling of data dir)")
    serve.set_defaults(func=cmd_serve)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConciergeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def cmd_fpn_run(args) -> int:
    net = net_from_json(Path(args.net).read_text())
    marking = marking_from_json(Path(args.marking).read_text(), net)
    cfg = ReasoningConfig(threshold=args.threshold)
    final, trace = run(net, marking, cfg)
    if args.trace:
        for record in trace:
            inputs = ", ".join(f"{d:.6f}" for d in record.input_degrees)
            print(f"[{record.iteration}] {record.transition_id}: ({inputs}) -> {record.produced:.6f}")
    for place in sorted(net.places, key=lambda p: p.proposition_id):
        print(f"{place.proposition_id} = {final.get(place.id):.6f}")
    return 0


def cmd_fpn_dot(args) -> int:
    net = net_from_json(Path(args.net).read_text())
    print(export_dot(net), end="")
    return 0


def fpn_main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="fpn", description="fuzzy Petri net tools")
    sub = parser.add_subparsers(dest="command", required=True)

    runp = sub.add_parser("run", help="run a net on a marking")
    runp.add_argument("--net", required=True, help="net JSON file")
    runp.add_argument("--marking", required=True, help="marking JSON file")
    runp.add_argument("--lambda", dest="threshold", type=float, default=0.1)
    runp.add_argument("--trace", action="store_true", help="print firings in iteration order")
    runp.set_defaults(func=cmd_fpn_run)

    dotp = sub.add_parser("dot", help="export a net as DOT")
    dotp.add_argument("--net", required=True, help="net JSON file")
    dotp.set_defaults(func=cmd_fpn_dot)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConciergeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def concierge_entry() -> None:
    sys.exit(concierge_main())


def fpn_entry() -> None:
    sys.exit(fpn_main())


if __name__ == "__main__":
    sys.exit(concierge_main())
