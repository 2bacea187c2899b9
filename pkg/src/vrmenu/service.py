"""HTTP service around the document store.

Documents live as canonical files under a data directory and are served
and edited over a small JSON API. Reads are concurrent; mutations are
serialized per document behind a lock, written to a temporary file, and
atomically renamed into place, so the on-disk file always holds the
last committed revision even across a crash.

Concurrency is optimistic: document responses carry the revision in the
``ETag`` and ``X-Revision`` headers, and mutating requests may send
``If-Match`` with the revision they were based on; a stale value gets a
409 and no change. Every successful mutation also emits one event on
the document's ``/events`` stream with the new revision and the ids of
the nodes that changed.
"""

from __future__ import annotations

import json
import logging
import os
import re
import threading
from pathlib import Path
from queue import Empty, SimpleQueue
from typing import Callable, Iterator

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, StreamingResponse

from . import editor
from .errors import (
    AnalysisError,
    CapacityExceededError,
    DocumentConstraintError,
    DocumentSchemaError,
    DocumentSyntaxError,
    EditError,
    InvalidMenuError,
    RevisionConflictError,
    UnknownIdError,
)
from .layout import DEFAULT_STYLE, layout
from .model import ButtonType, MenuDocument
from .persist import (
    button_spec_from_payload,
    canonical_json,
    create_request_from_payload,
    layout_payload,
    outcome_payload,
    parse_document,
    report_payload,
    serialize_document,
    style_from_payload,
    violations_payload,
)
from .usability import (
    FittsParams,
    ViewerConfig,
    default_viewer,
    menu_usability_report,
)

log = logging.getLogger(__name__)

_SAFE_DOC_ID = re.compile(r"^[A-Za-z0-9_-]+$")
_BUTTON_PATCH_KEYS = {"type", "subMenuRef", "functionId", "text", "iconRef"}


def _heartbeat_seconds() -> float:
    # Tunable so tests can keep stream teardown fast.
    try:
        return float(os.environ.get("VRMENU_SSE_HEARTBEAT", "15"))
    except ValueError:
        return 15.0


# ---------------------------------------------------------------------
# Store
# ---------------------------------------------------------------------


class DocumentStore:
    """In-memory documents backed by canonical files on disk."""

    def __init__(self, data_dir: str | os.PathLike):
        self._dir = Path(data_dir)
        self._dir.mkdir(parents=True, exist_ok=True)
        self._docs: dict[str, MenuDocument] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._subscribers: dict[str, list[SimpleQueue]] = {}
        self._registry_lock = threading.Lock()
        for path in sorted(self._dir.glob("*.json")):
            doc_id = path.stem
            if not _SAFE_DOC_ID.match(doc_id):
                continue
            try:
                self._docs[doc_id] = parse_document(path.read_text(encoding="utf-8"))
            except Exception:
                log.warning("skipping unreadable document file %s", path, exc_info=True)

    def list_documents(self) -> list[tuple[str, int]]:
        with self._registry_lock:
            return sorted((doc_id, doc.revision) for doc_id, doc in self._docs.items())

    def get(self, doc_id: str) -> MenuDocument:
        with self._registry_lock:
            doc = self._docs.get(doc_id)
        if doc is None:
            raise UnknownIdError(doc_id, f"no document {doc_id!r}")
        return doc

    def _lock_for(self, doc_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(doc_id, threading.Lock())

    def replace(
        self, doc_id: str, doc: MenuDocument, expected_revision: int | None
    ) -> MenuDocument:
        """Wholesale PUT. Existing documents require the matching
        revision and come back bumped by one; absent ones are created
        with the revision they brought."""
        with self._lock_for(doc_id):
            current = self._docs.get(doc_id)
            if current is not None:
                if expected_revision is None or expected_revision != current.revision:
                    raise RevisionConflictError(
                        expected_revision if expected_revision is not None else -1,
                        current.revision,
                    )
                doc = doc.clone()
                doc.revision = current.revision + 1
            elif expected_revision is not None:
                raise RevisionConflictError(expected_revision, -1)
            self._commit(doc_id, doc, current)
            return doc

    def mutate(
        self,
        doc_id: str,
        transaction: Callable[[MenuDocument], editor.EditOutcome],
        expected_revision: int | None,
    ) -> editor.EditOutcome:
        with self._lock_for(doc_id):
            current = self.get(doc_id)
            if expected_revision is not None and expected_revision != current.revision:
                raise RevisionConflictError(expected_revision, current.revision)
            outcome = transaction(current)
            self._commit(doc_id, outcome.document, current)
            return outcome

    def subscribe(self, doc_id: str) -> SimpleQueue:
        events: SimpleQueue = SimpleQueue()
        with self._registry_lock:
            self._subscribers.setdefault(doc_id, []).append(events)
        return events

    def unsubscribe(self, doc_id: str, events: SimpleQueue) -> None:
        with self._registry_lock:
            listeners = self._subscribers.get(doc_id, [])
            if events in listeners:
                listeners.remove(events)

    def _commit(
        self, doc_id: str, doc: MenuDocument, previous: MenuDocument | None
    ) -> None:
        text = serialize_document(doc)
        final = self._dir / f"{doc_id}.json"
        temp = self._dir / f"{doc_id}.json.tmp"
        temp.write_text(text, encoding="utf-8")
        os.replace(temp, final)
        with self._registry_lock:
            self._docs[doc_id] = doc
            listeners = list(self._subscribers.get(doc_id, []))
        event = {
            "revision": doc.revision,
            "changedIds": _changed_ids(previous, doc),
        }
        for queue_ in listeners:
            queue_.put(event)


def _changed_ids(old: MenuDocument | None, new: MenuDocument) -> list[str]:
    changed: set[str] = set()
    for pick in (lambda d: d.menus, lambda d: d.buttons):
        before = pick(old) if old is not None else {}
        after = pick(new)
        for node_id in before.keys() | after.keys():
            if before.get(node_id) != after.get(node_id):
                changed.add(node_id)
    return sorted(changed)


# ---------------------------------------------------------------------
# Request plumbing
# ---------------------------------------------------------------------


def _canonical_response(text: str, revision: int | None = None) -> Response:
    headers = {}
    if revision is not None:
        headers["ETag"] = f'"{revision}"'
        headers["X-Revision"] = str(revision)
    return Response(content=text, media_type="application/json", headers=headers)


def _error_response(status: int, error_type: str, message: str, **extra) -> JSONResponse:
    body = {"error": {"type": error_type, "message": message, **extra}}
    return JSONResponse(body, status_code=status)


def _revision_header(request: Request) -> int | None:
    raw = request.headers.get("if-match")
    if raw is None:
        return None
    raw = raw.strip().strip('"')
    try:
        return int(raw)
    except ValueError:
        raise DocumentSchemaError("If-Match", f"not a revision number: {raw!r}") from None


async def _json_body(request: Request) -> object:
    raw = await request.body()
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DocumentSyntaxError(str(exc), getattr(exc, "lineno", 0), getattr(exc, "colno", 0)) from exc


def _check_doc_id(doc_id: str) -> None:
    if not _SAFE_DOC_ID.match(doc_id):
        raise DocumentSchemaError("documentId", "must match [A-Za-z0-9_-]+")


def _query_style(style: str | None):
    if style is None:
        return DEFAULT_STYLE
    try:
        payload = json.loads(style)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(exc.msg, exc.lineno, exc.colno) from exc
    return style_from_payload(payload)


def _query_viewer(viewer: str | None) -> ViewerConfig | None:
    if viewer is None:
        return None
    parts = viewer.split(",")
    if len(parts) != 6:
        raise DocumentSchemaError("viewer", "expected 'x,y,z,dx,dy,dz'")
    try:
        x, y, z, dx, dy, dz = (float(part) for part in parts)
    except ValueError:
        raise DocumentSchemaError("viewer", "components must be numbers") from None
    length = (dx * dx + dy * dy + dz * dz) ** 0.5
    if length == 0.0:
        raise DocumentSchemaError("viewer", "direction must be non-zero")
    return ViewerConfig((x, y, z), (dx / length, dy / length, dz / length))


# ---------------------------------------------------------------------
# App factory
# ---------------------------------------------------------------------


def create_app(data_dir: str | os.PathLike | None = None) -> FastAPI:
    store = DocumentStore(data_dir or os.environ.get("DATA_DIR", "./data"))
    app = FastAPI(title="vrmenu service")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
        expose_headers=["ETag", "X-Revision"],
    )

    @app.exception_handler(UnknownIdError)
    async def _unknown_id(_, exc: UnknownIdError):
        return _error_response(404, "UnknownId", str(exc), nodeId=exc.node_id)

    @app.exception_handler(RevisionConflictError)
    async def _conflict(_, exc: RevisionConflictError):
        return _error_response(
            409, "RevisionConflict", str(exc), expected=exc.expected, actual=exc.actual
        )

    @app.exception_handler(CapacityExceededError)
    async def _capacity(_, exc: CapacityExceededError):
        return _error_response(
            422,
            "CapacityExceeded",
            str(exc),
            menuId=exc.menu_id,
            attempted=exc.attempted,
            capacity=exc.capacity,
        )

    @app.exception_handler(EditError)
    async def _edit_error(_, exc: EditError):
        return _error_response(422, type(exc).__name__.removesuffix("Error"), str(exc))

    @app.exception_handler(DocumentConstraintError)
    async def _constraint(_, exc: DocumentConstraintError):
        return JSONResponse(
            {
                "error": {"type": "ConstraintViolation", "message": str(exc)},
                "violations": violations_payload(exc.violations),
            },
            status_code=422,
        )

    @app.exception_handler(DocumentSchemaError)
    async def _schema(_, exc: DocumentSchemaError):
        return _error_response(422, "Schema", str(exc), fieldPath=exc.field_path)

    @app.exception_handler(DocumentSyntaxError)
    async def _syntax(_, exc: DocumentSyntaxError):
        return _error_response(400, "Syntax", str(exc))

    @app.exception_handler(InvalidMenuError)
    async def _invalid_menu(_, exc: InvalidMenuError):
        return JSONResponse(
            {
                "error": {"type": "InvalidMenu", "message": str(exc)},
                "violations": violations_payload(exc.violations),
            },
            status_code=422,
        )

    @app.exception_handler(AnalysisError)
    async def _analysis(_, exc: AnalysisError):
        return _error_response(422, type(exc).__name__.removesuffix("Error"), str(exc))

    # -- documents ----------------------------------------------------

    @app.get("/documents")
    async def list_documents():
        return {
            "documents": [
                {"id": doc_id, "revision": revision}
                for doc_id, revision in store.list_documents()
            ]
        }

    @app.get("/documents/{doc_id}")
    async def get_document(doc_id: str):
        _check_doc_id(doc_id)
        doc = store.get(doc_id)
        return _canonical_response(serialize_document(doc), doc.revision)

    @app.put("/documents/{doc_id}")
    async def put_document(doc_id: str, request: Request):
        _check_doc_id(doc_id)
        raw = await request.body()
        doc = parse_document(raw.decode("utf-8"))
        stored = store.replace(doc_id, doc, _revision_header(request))
        return _canonical_response(
            canonical_json({"id": doc_id, "revision": stored.revision}), stored.revision
        )

    # -- editing ------------------------------------------------------

    @app.post("/documents/{doc_id}/menus")
    async def create_menu(doc_id: str, request: Request):
        _check_doc_id(doc_id)
        create_request = create_request_from_payload(await _json_body(request))
        outcome = store.mutate(
            doc_id,
            lambda doc: editor.create_menu(doc, create_request),
            _revision_header(request),
        )
        return _canonical_response(
            canonical_json(outcome_payload(outcome)), outcome.document.revision
        )

    @app.patch("/documents/{doc_id}/menus/{menu_id}")
    async def patch_menu(doc_id: str, menu_id: str, request: Request):
        _check_doc_id(doc_id)
        payload = await _json_body(request)
        if not isinstance(payload, dict) or "title" not in payload:
            raise DocumentSchemaError("title", "menu PATCH needs a title field")
        title = payload["title"]
        if not isinstance(title, str):
            raise DocumentSchemaError("title", "must be a string")
        outcome = store.mutate(
            doc_id,
            lambda doc: editor.set_menu_title(doc, menu_id, title),
            _revision_header(request),
        )
        return _canonical_response(
            canonical_json(outcome_payload(outcome)), outcome.document.revision
        )

    @app.post("/documents/{doc_id}/menus/{menu_id}/buttons")
    async def add_button(doc_id: str, menu_id: str, request: Request):
        _check_doc_id(doc_id)
        spec = button_spec_from_payload(await _json_body(request))
        outcome = store.mutate(
            doc_id,
            lambda doc: editor.add_button(doc, menu_id, spec),
            _revision_header(request),
        )
        return _canonical_response(
            canonical_json(outcome_payload(outcome)), outcome.document.revision
        )

    @app.patch("/documents/{doc_id}/buttons/{button_id}")
    async def patch_button(doc_id: str, button_id: str, request: Request):
        _check_doc_id(doc_id)
        payload = await _json_body(request)
        if not isinstance(payload, dict):
            raise DocumentSchemaError("$", "button PATCH needs an object body")
        unknown = sorted(set(payload) - _BUTTON_PATCH_KEYS)
        if unknown:
            raise DocumentSchemaError("$", f"unknown keys: {', '.join(unknown)}")
        if not payload:
            raise DocumentSchemaError("$", "button PATCH changes nothing")

        def transaction(doc: MenuDocument) -> editor.EditOutcome:
            outcome = editor.EditOutcome(doc)
            if "type" in payload:
                outcome = editor.set_button_type(
                    outcome.document,
                    button_id,
                    ButtonType(payload["type"]),
                    sub_menu_ref=payload.get("subMenuRef"),
                    function_id=payload.get("functionId"),
                )
            elif "subMenuRef" in payload or "functionId" in payload:
                raise DocumentSchemaError(
                    "type", "subMenuRef/functionId only apply together with type"
                )
            if "text" in payload:
                if not isinstance(payload["text"], str):
                    raise DocumentSchemaError("text", "must be a string")
                outcome = editor.set_button_text(outcome.document, button_id, payload["text"])
            if "iconRef" in payload:
                icon = payload["iconRef"]
                if icon is not None and not isinstance(icon, str):
                    raise DocumentSchemaError("iconRef", "must be a string or null")
                outcome = editor.set_button_icon(outcome.document, button_id, icon)
            return outcome

        outcome = store.mutate(doc_id, transaction, _revision_header(request))
        return _canonical_response(
            canonical_json(outcome_payload(outcome)), outcome.document.revision
        )

    @app.delete("/documents/{doc_id}/buttons/{button_id}")
    async def delete_button(doc_id: str, button_id: str, request: Request):
        _check_doc_id(doc_id)
        outcome = store.mutate(
            doc_id,
            lambda doc: editor.remove_button(doc, button_id),
            _revision_header(request),
        )
        return _canonical_response(
            canonical_json(outcome_payload(outcome)), outcome.document.revision
        )

    # -- selection / analysis -----------------------------------------

    @app.get("/documents/{doc_id}/selection/{node_id}")
    async def selection(doc_id: str, node_id: str):
        _check_doc_id(doc_id)
        doc = store.get(doc_id)
        return {"kind": editor.resolve_selection(doc, node_id).value}

    @app.get("/documents/{doc_id}/menus/{menu_id}/layout")
    async def menu_layout(doc_id: str, menu_id: str, style: str | None = None):
        _check_doc_id(doc_id)
        doc = store.get(doc_id)
        result = layout(doc.menu(menu_id), _query_style(style))
        return _canonical_response(canonical_json(layout_payload(result)), doc.revision)

    @app.get("/documents/{doc_id}/menus/{menu_id}/usability")
    async def menu_usability(
        doc_id: str,
        menu_id: str,
        a: float = 0.0,
        b: float = 1.0,
        viewer: str | None = None,
        style: str | None = None,
    ):
        _check_doc_id(doc_id)
        doc = store.get(doc_id)
        menu = doc.menu(menu_id)
        result = layout(menu, _query_style(style))
        try:
            params = FittsParams(a=a, b=b)
        except ValueError as exc:
            raise DocumentSchemaError("a,b", str(exc)) from None
        viewer_config = _query_viewer(viewer) or default_viewer(menu, result)
        report = menu_usability_report(menu, result, viewer_config, params)
        return _canonical_response(canonical_json(report_payload(report)), doc.revision)

    # -- events -------------------------------------------------------

    @app.get("/documents/{doc_id}/events")
    async def events(doc_id: str):
        _check_doc_id(doc_id)
        store.get(doc_id)

        heartbeat = _heartbeat_seconds()

        def stream() -> Iterator[str]:
            events_queue = store.subscribe(doc_id)
            try:
                # Snapshot event so a fresh client learns the current
                # revision without waiting for an edit. Taken after
                # subscribing, so no edit can fall in between.
                current = store.get(doc_id)
                yield _sse_event({"revision": current.revision, "changedIds": []})
                while True:
                    try:
                        event = events_queue.get(timeout=heartbeat)
                    except Empty:
                        yield ": keep-alive\n\n"
                        continue
                    yield _sse_event(event)
            finally:
                store.unsubscribe(doc_id, events_queue)

        return StreamingResponse(stream(), media_type="text/event-stream")

    # -- optional static UI -------------------------------------------

    ui_dir = os.environ.get("VRMENU_UI_DIR")
    if ui_dir and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def _sse_event(payload: dict) -> str:
    return f"data: {json.dumps(payload, sort_keys=True)}\n\n"
