"""Command-line interface for the menu toolkit.

Commands that transform a document print the new document to ``--out``
(or standard output) and a small outcome summary (created ids,
warnings, revision) to standard error, so scripted pipelines can chain
edits while still seeing what happened. Analysis commands print
canonical JSON payloads that are byte-identical to the HTTP service's
responses for the same inputs.

Exit codes: 0 success, 2 validation or constraint failure, 3 syntax or
schema error, 4 unknown id.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import editor
from .errors import (
    AnalysisError,
    DocumentConstraintError,
    DocumentSchemaError,
    DocumentSyntaxError,
    EditError,
    InvalidMenuError,
    UnknownIdError,
)
from .layout import DEFAULT_STYLE, StyleParams, layout
from .model import FORMAT_VERSION, ButtonType, MenuDocument, MenuType, PositionMode
from .persist import (
    canonical_json,
    document_from_payload,
    layout_payload,
    outcome_payload,
    parse_create_request,
    parse_document,
    parse_style,
    report_payload,
    serialize_document,
    simulation_payload,
    export_scene,
    violations_payload,
)
from .usability import (
    FittsParams,
    ViewerConfig,
    default_viewer,
    menu_usability_report,
    simulate_selections,
)
from .validation import validate

EXIT_OK = 0
EXIT_CONSTRAINT = 2
EXIT_SYNTAX = 3
EXIT_UNKNOWN_ID = 4


# ---------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_document(path: str) -> MenuDocument:
    return parse_document(_read_text(path))


def _load_style(path: str | None) -> StyleParams:
    if path is None:
        return DEFAULT_STYLE
    return parse_style(_read_text(path))


def _parse_params_flag(text: str) -> FittsParams:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--params expects 'a,b', got {text!r}")
    return FittsParams(a=float(parts[0]), b=float(parts[1]))


def _parse_viewer_flag(text: str) -> ViewerConfig:
    parts = text.split(",")
    if len(parts) != 6:
        raise ValueError(f"--viewer expects 'x,y,z,dx,dy,dz', got {text!r}")
    x, y, z, dx, dy, dz = (float(part) for part in parts)
    length = (dx * dx + dy * dy + dz * dz) ** 0.5
    if length == 0.0:
        raise ValueError("--viewer direction must be non-zero")
    return ViewerConfig(
        eye_position=(x, y, z),
        start_direction=(dx / length, dy / length, dz / length),
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit_outcome(outcome: editor.EditOutcome, out: str | None) -> int:
    _emit(serialize_document(outcome.document), out)
    sys.stderr.write(canonical_json(outcome_payload(outcome)))
    return EXIT_OK


def _analysis_inputs(args):
    doc = _load_document(args.doc)
    menu = doc.menu(args.menu)
    style = _load_style(args.style)
    result = layout(menu, style)
    viewer = _parse_viewer_flag(args.viewer) if args.viewer else default_viewer(menu, result)
    params = _parse_params_flag(args.params) if args.params else FittsParams()
    return menu, result, viewer, params


# ---------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------


def _cmd_new(args) -> int:
    doc = MenuDocument(format_version=FORMAT_VERSION)
    _emit(serialize_document(doc), args.out)
    return EXIT_OK


def _cmd_creator(args) -> int:
    doc = _load_document(args.doc)
    if args.request:
        request = parse_create_request(_read_text(args.request))
    else:
        missing = [
            flag
            for flag, value in (
                ("--menu-name", args.menu_name),
                ("--menu-type", args.menu_type),
                ("--menu-title", args.menu_title),
            )
            if value is None
        ]
        if missing:
            raise ValueError(f"creator needs --request or {', '.join(missing)}")
        request = editor.CreateMenuRequest(
            menu_name=args.menu_name,
            menu_type=MenuType(args.menu_type),
            is_root_menu=args.root,
            menu_title=args.menu_title,
            position_mode=PositionMode(args.position) if args.position else None,
        )
    outcome = editor.create_menu(doc, request)
    return _emit_outcome(outcome, args.out)


def _cmd_modify(args) -> int:
    doc = _load_document(args.doc)
    outcome = args.apply(doc, args)
    return _emit_outcome(outcome, args.out)


def _apply_set_title(doc, args):
    return editor.set_menu_title(doc, args.menu, args.title)


def _apply_add_button(doc, args):
    spec = editor.ButtonSpec(
        name=args.name,
        button_type=ButtonType(args.type),
        text=args.text,
        icon_ref=args.icon,
        sub_menu_ref=args.submenu,
        function_id=args.function,
    )
    return editor.add_button(doc, args.menu, spec)


def _apply_set_button_type(doc, args):
    return editor.set_button_type(
        doc,
        args.button,
        ButtonType(args.type),
        sub_menu_ref=args.submenu,
        function_id=args.function,
    )


def _apply_set_text(doc, args):
    return editor.set_button_text(doc, args.button, args.text)


def _apply_set_icon(doc, args):
    return editor.set_button_icon(doc, args.button, args.icon)


def _apply_remove_button(doc, args):
    return editor.remove_button(doc, args.button)


def _cmd_validate(args) -> int:
    try:
        payload = json.loads(_read_text(args.doc))
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    doc = document_from_payload(payload)
    violations = validate(doc)
    _emit(canonical_json(violations_payload(violations)), args.out)
    return EXIT_OK if not violations else EXIT_CONSTRAINT


def _cmd_layout(args) -> int:
    doc = _load_document(args.doc)
    menu = doc.menu(args.menu)
    result = layout(menu, _load_style(args.style))
    _emit(canonical_json(layout_payload(result)), args.out)
    return EXIT_OK


def _cmd_export(args) -> int:
    doc = _load_document(args.doc)
    scene = export_scene(doc, _load_style(args.style))
    _emit(canonical_json(scene), args.out)
    return EXIT_OK


def _cmd_analyze(args) -> int:
    menu, result, viewer, params = _analysis_inputs(args)
    report = menu_usability_report(menu, result, viewer, params)
    _emit(canonical_json(report_payload(report)), args.out)
    return EXIT_OK


def _cmd_compare(args) -> int:
    if len(args.menus) != 2:
        raise ValueError("compare needs --menu given exactly twice")
    doc = _load_document(args.doc)
    style = _load_style(args.style)
    params = _parse_params_flag(args.params) if args.params else FittsParams()
    reports = []
    for menu_id in args.menus:
        menu = doc.menu(menu_id)
        result = layout(menu, style)
        viewer = _parse_viewer_flag(args.viewer) if args.viewer else default_viewer(menu, result)
        reports.append(menu_usability_report(menu, result, viewer, params))
    left, right = reports
    payload = {
        "left": report_payload(left),
        "right": report_payload(right),
        "delta": {
            "meanMT": right.mean_movement_time - left.mean_movement_time,
            "maxMT": right.max_movement_time - left.max_movement_time,
            "meanID": right.mean_difficulty_bits - left.mean_difficulty_bits,
        },
    }
    _emit(canonical_json(payload), args.out)
    return EXIT_OK


def _cmd_simulate(args) -> int:
    menu, result, viewer, params = _analysis_inputs(args)
    simulation = simulate_selections(
        menu, result, viewer, params, trials=args.trials, seed=args.seed
    )
    _emit(canonical_json(simulation_payload(simulation)), args.out)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    data_dir = args.data_dir or os.environ.get("DATA_DIR", "./data")
    app = create_app(data_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return EXIT_OK


# ---------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vrmenu",
        description="Design, lay out, and score hierarchical VR menus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="write output to this file instead of stdout")

    p_new = sub.add_parser("new", help="create an empty document")
    add_out(p_new)
    p_new.set_defaults(handler=_cmd_new)

    p_creator = sub.add_parser("creator", help="instantiate a menu from a request")
    p_creator.add_argument("--doc", required=True)
    p_creator.add_argument("--request", help="request file (JSON)")
    p_creator.add_argument("--menu-name")
    p_creator.add_argument("--menu-type", choices=[t.value for t in MenuType])
    p_creator.add_argument("--menu-title")
    p_creator.add_argument("--root", action="store_true", help="mark the menu as a root")
    p_creator.add_argument("--position", choices=[m.value for m in PositionMode])
    add_out(p_creator)
    p_creator.set_defaults(handler=_cmd_creator)

    p_modify = sub.add_parser("modify", help="edit one node of a document")
    actions = p_modify.add_subparsers(dest="action", required=True)

    def add_action(name, apply):
        action = actions.add_parser(name)
        action.add_argument("--doc", required=True)
        add_out(action)
        action.set_defaults(apply=apply, handler=_cmd_modify)
        return action

    a_title = add_action("set-title", _apply_set_title)
    a_title.add_argument("--menu", required=True)
    a_title.add_argument("--title", required=True)

    a_add = add_action("add-button", _apply_add_button)
    a_add.add_argument("--menu", required=True)
    a_add.add_argument("--name", required=True)
    a_add.add_argument("--type", required=True, choices=[t.value for t in ButtonType])
    a_add.add_argument("--text", default="")
    a_add.add_argument("--icon")
    a_add.add_argument("--submenu", help="menu id to bind (SubMenu buttons)")
    a_add.add_argument("--function", help="function id (Function buttons)")

    a_type = add_action("set-button-type", _apply_set_button_type)
    a_type.add_argument("--button", required=True)
    a_type.add_argument("--type", required=True, choices=[t.value for t in ButtonType])
    a_type.add_argument("--submenu")
    a_type.add_argument("--function")

    a_text = add_action("set-text", _apply_set_text)
    a_text.add_argument("--button", required=True)
    a_text.add_argument("--text", required=True)

    a_icon = add_action("set-icon", _apply_set_icon)
    a_icon.add_argument("--button", required=True)
    a_icon.add_argument("--icon", help="omit to clear the icon")

    a_remove = add_action("remove-button", _apply_remove_button)
    a_remove.add_argument("--button", required=True)

    p_validate = sub.add_parser("validate", help="list constraint violations")
    p_validate.add_argument("--doc", required=True)
    add_out(p_validate)
    p_validate.set_defaults(handler=_cmd_validate)

    p_layout = sub.add_parser("layout", help="compute transforms for one menu")
    p_layout.add_argument("--doc", required=True)
    p_layout.add_argument("--menu", required=True)
    p_layout.add_argument("--style", help="style override file (JSON)")
    add_out(p_layout)
    p_layout.set_defaults(handler=_cmd_layout)

    p_export = sub.add_parser("export", help="export the whole scene")
    p_export.add_argument("--doc", required=True)
    p_export.add_argument("--style")
    add_out(p_export)
    p_export.set_defaults(handler=_cmd_export)

    def add_analysis_flags(p):
        p.add_argument("--doc", required=True)
        p.add_argument("--style")
        p.add_argument("--params", help="Fitts constants as 'a,b'")
        p.add_argument("--viewer", help="eye and start direction as 'x,y,z,dx,dy,dz'")
        add_out(p)

    p_analyze = sub.add_parser("analyze", help="usability report for one menu")
    add_analysis_flags(p_analyze)
    p_analyze.add_argument("--menu", required=True)
    p_analyze.set_defaults(handler=_cmd_analyze)

    p_compare = sub.add_parser("compare", help="two usability reports side by side")
    add_analysis_flags(p_compare)
    p_compare.add_argument(
        "--menu", dest="menus", action="append", required=True,
        help="repeat twice: left menu id, right menu id",
    )
    p_compare.set_defaults(handler=_cmd_compare)

    p_simulate = sub.add_parser("simulate", help="Monte-Carlo selection run")
    add_analysis_flags(p_simulate)
    p_simulate.add_argument("--menu", required=True)
    p_simulate.add_argument("--trials", type=int, default=100_000)
    p_simulate.add_argument("--seed", type=int, default=0)
    p_simulate.set_defaults(handler=_cmd_simulate)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--data-dir", help="document directory (default $DATA_DIR or ./data)")
    p_serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        # Output format is UTF-8 regardless of locale.
        sys.stdout.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DocumentSyntaxError as exc:
        sys.stderr.write(f"error: syntax: {exc}\n")
        return EXIT_SYNTAX
    except DocumentSchemaError as exc:
        sys.stderr.write(f"error: schema: {exc}\n")
        return EXIT_SYNTAX
    except UnknownIdError as exc:
        sys.stderr.write(f"error: unknown id: {exc}\n")
        return EXIT_UNKNOWN_ID
    except DocumentConstraintError as exc:
        sys.stderr.write(f"error: constraint: {exc}\n")
        return EXIT_CONSTRAINT
    except (EditError, InvalidMenuError, AnalysisError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONSTRAINT
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
