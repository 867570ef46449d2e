"""HTTP session service: load a document, analyze, select, edit, undo, export.

Each session holds one document plus derived views (theme, palette, element
list) that stay consistent with it after every edit. The palette keeps its
original block ordering across recolors; only brand-new colors get appended
ranks. Per-session writes are serialized with a lock; separate sessions are
fully independent.

Sessions live in memory. With a persistence directory configured, the upload
and an append-only action log are written per session and replayed on
startup, so a restarted service resumes where it left off.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse, Response

from .colorspace import Rgba
from .elements import ElementEntry, build_element_list, elements_with_color
from .errors import (
    AddressNotFound,
    EmptyGroup,
    EmptyLog,
    LottieColorError,
    UnknownColor,
    UnknownSession,
)
from .lottie import (
    ColorAddress,
    LottieDocument,
    parse_document,
    serialize_document,
)
from .occurrences import OccurrenceSet, extract_occurrences
from .palette import (
    ScenePalette,
    build_palette,
    palette_to_json,
    recolor_blocks,
    rezoom,
)
from .recolor import (
    DEFAULT_RAMP,
    ColorGroup,
    EditCommand,
    EditLog,
    HslShift,
    apply_frame_isolated,
    apply_group_shift,
    apply_set_rgb,
    apply_set_rgb_group,
    group_auto,
    group_edit_members,
    group_manual,
)
from .theme import (
    DEFAULT_SIMILARITY_THRESHOLD,
    ThemeConfig,
    ThemeSwatch,
    extract_theme,
)

__all__ = ["ServiceConfig", "Session", "SessionStore", "create_app", "DEFAULT_TTL"]

DEFAULT_TTL = 7200.0  # seconds a session survives without being touched


class _BadRequest(LottieColorError):
    code = "bad-request"


class _ExpiredSession(LottieColorError):
    code = "session-expired"


_STATUS_BY_CODE = {
    "bad-request": 400,
    "malformed-json": 400,
    "unsupported-document": 400,
    "empty-document": 400,
    "zero-weight-document": 400,
    "unknown-session": 404,
    "session-expired": 410,
    "address-not-found": 404,
    "unknown-color": 404,
    "empty-group": 409,
    "empty-log": 409,
    "rgb-edit-not-allowed": 409,
    "out-of-bounds": 409,
    "frame-out-of-range": 409,
}


@dataclass(frozen=True)
class ServiceConfig:
    ttl: float = DEFAULT_TTL
    persist_dir: Optional[str] = None
    k: int = 5
    seed: int = 42
    threshold: float = DEFAULT_SIMILARITY_THRESHOLD
    step: Optional[float] = None  # palette column step; None = half frame rate
    ui_dir: Optional[str] = None  # static bundle mounted at / when set


@dataclass
class Session:
    id: str
    document: LottieDocument
    occurrence_set: OccurrenceSet
    theme: list[ThemeSwatch]
    palette: ScenePalette
    elements: list[ElementEntry]
    selection: Optional[ColorGroup] = None
    log: EditLog = field(default_factory=EditLog)
    playhead: float = 0.0
    touched_at: float = 0.0
    lock: threading.Lock = field(default_factory=threading.Lock)
    # palette + selection snapshots aligned with log.applied, for undo
    view_snapshots: list[tuple] = field(default_factory=list)


def _parse_hex(value, what: str = "color") -> Rgba:
    if not isinstance(value, str):
        raise _BadRequest(f"{what} must be a hex string, got {value!r}")
    try:
        return Rgba.from_hex(value)
    except ValueError as exc:
        raise _BadRequest(f"bad {what}: {exc}") from exc


def _parse_number(value, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise _BadRequest(f"{what} must be a number, got {value!r}")
    return float(value)


def _parse_address(value) -> ColorAddress:
    if not isinstance(value, dict):
        raise _BadRequest("address must be an object with layer/path/slot")
    try:
        return ColorAddress.from_json(value)
    except (KeyError, TypeError, ValueError) as exc:
        raise _BadRequest(f"bad address: {exc}") from exc


def _selection_json(session: Session) -> Optional[dict]:
    group = session.selection
    if group is None:
        return None
    members = [c.to_hex() for c in group.sorted_members()]
    return {
        "members": members,
        "origin": group.origin,
        "elements": elements_with_color(session.elements, group.members),
    }


class SessionStore:
    """In-memory session table with TTL expiry and optional disk replay."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self._sessions: dict[str, Session] = {}
        self._table_lock = threading.Lock()
        self._persist_root = Path(config.persist_dir) if config.persist_dir else None
        self._replaying = False
        if self._persist_root:
            self._persist_root.mkdir(parents=True, exist_ok=True)
            self._replay_all()

    # -- lifecycle ---------------------------------------------------------

    def create(self, raw_document, session_id: Optional[str] = None) -> Session:
        doc = parse_document(json.dumps(raw_document))
        occ = extract_occurrences(doc)
        cfg = ThemeConfig(k=self.config.k, seed=self.config.seed)
        theme = extract_theme(occ, cfg)
        bounds = (doc.in_point, doc.out_point, doc.frame_rate)
        palette = build_palette(occ, bounds, step=self.config.step)
        elements = build_element_list(doc, occ)
        session = Session(
            id=session_id or uuid.uuid4().hex,
            document=doc,
            occurrence_set=occ,
            theme=theme,
            palette=palette,
            elements=elements,
            playhead=doc.in_point,
            touched_at=time.monotonic(),
        )
        with self._table_lock:
            self._sessions[session.id] = session
        if session_id is None:
            self._persist_upload(session.id, raw_document)
        return session

    def get(self, session_id: str) -> Session:
        with self._table_lock:
            session = self._sessions.get(session_id)
            if session is None:
                raise UnknownSession(f"no session {session_id}")
            if time.monotonic() - session.touched_at > self.config.ttl:
                del self._sessions[session_id]
                raise _ExpiredSession(session_id)
            session.touched_at = time.monotonic()
            return session

    # -- derived-view maintenance -------------------------------------------

    def _refresh_after_edit(self, session: Session, command: EditCommand):
        """Recompute analysis caches; patch the palette, keeping its order."""
        session.view_snapshots.append((session.palette, session.selection))
        doc = command.after
        session.document = doc
        session.occurrence_set = extract_occurrences(doc)
        cfg = ThemeConfig(k=self.config.k, seed=self.config.seed)
        session.theme = extract_theme(session.occurrence_set, cfg)
        session.elements = build_element_list(doc, session.occurrence_set)
        old = session.palette
        if command.kind == "frame_isolated":
            # interval structure changed; rebuild columns under the frozen order
            bounds = (doc.in_point, doc.out_point, doc.frame_rate)
            session.palette = build_palette(
                session.occurrence_set,
                bounds,
                step=old.step,
                alpha=old.alpha,
                order=old.order,
                alpha_min=old.alpha_min,
                alpha_max=old.alpha_max,
            )
        else:
            mapping = {o: n for o, n in command.mapping.items() if o != n}
            session.palette = recolor_blocks(old, mapping) if mapping else old
        if session.selection is not None:
            remapped = {
                command.mapping.get(m, m) for m in session.selection.members
            }
            session.selection = ColorGroup(
                frozenset(remapped), session.selection.origin
            )

    def _restore_before(self, session: Session, command: EditCommand):
        session.document = command.before
        session.occurrence_set = extract_occurrences(command.before)
        cfg = ThemeConfig(k=self.config.k, seed=self.config.seed)
        session.theme = extract_theme(session.occurrence_set, cfg)
        session.elements = build_element_list(command.before, session.occurrence_set)
        session.palette, session.selection = session.view_snapshots.pop()

    # -- actions (called under the session lock) -----------------------------

    def apply_selection(self, session: Session, payload: dict) -> Optional[dict]:
        if not isinstance(payload, dict):
            raise _BadRequest("selection body must be a JSON object")
        if payload.get("clear"):
            session.selection = None
        elif "auto" in payload:
            spec = payload["auto"]
            if not isinstance(spec, dict) or "theme" not in spec:
                raise _BadRequest('auto selection needs {"theme": hex, "threshold"?}')
            theme_color = _parse_hex(spec["theme"], "theme")
            threshold = self.config.threshold
            if "threshold" in spec:
                threshold = _parse_number(spec["threshold"], "threshold")
            session.selection = group_auto(
                theme_color, session.occurrence_set, threshold
            )
        elif "manual" in payload:
            hexes = payload["manual"]
            if not isinstance(hexes, list):
                raise _BadRequest("manual selection must be a list of hex colors")
            colors = [_parse_hex(h) for h in hexes]
            self._require_present(session, colors)
            session.selection = group_manual(colors)
        elif "edit" in payload:
            if session.selection is None:
                raise EmptyGroup("no selection to edit")
            spec = payload["edit"]
            if not isinstance(spec, dict):
                raise _BadRequest('edit selection needs {"add": [...], "remove": [...]}')
            add = [_parse_hex(h) for h in spec.get("add", [])]
            remove = [_parse_hex(h) for h in spec.get("remove", [])]
            self._require_present(session, add)
            session.selection = group_edit_members(session.selection, add, remove)
        else:
            raise _BadRequest(
                "selection body must contain one of: auto, manual, edit, clear"
            )
        self._persist_action(session.id, {"op": "selection", "body": payload})
        return _selection_json(session)

    def _require_present(self, session: Session, colors):
        present = {o.color for o in session.occurrence_set.occurrences}
        missing = [c for c in colors if c not in present]
        if missing:
            raise UnknownColor(
                "colors not in document: " + ", ".join(c.to_hex() for c in missing)
            )

    def apply_edit(self, session: Session, payload: dict) -> dict:
        if not isinstance(payload, dict):
            raise _BadRequest("edit body must be a JSON object")
        kind = payload.get("kind")
        doc = session.document
        if kind == "set_rgb":
            new = _parse_hex(payload.get("to"), "to")
            if "from" in payload:
                old = _parse_hex(payload["from"], "from")
                new_doc, changed = apply_set_rgb(doc, old, new)
                mapping = {old: new}
            else:
                group = self._group_for(session, payload)
                new_doc, changed = apply_set_rgb_group(doc, group, new)
                mapping = {next(iter(group.members)): new}
            command = EditCommand("set_rgb", doc, new_doc, mapping, changed)
        elif kind == "group_shift":
            group = self._group_for(session, payload)
            shift = self._shift_for(payload)
            new_doc, mapping, changed = apply_group_shift(doc, group, shift)
            command = EditCommand(
                "group_shift",
                doc,
                new_doc,
                mapping,
                changed,
                {"channel": shift.channel, "delta": shift.delta},
            )
        elif kind == "frame_isolated":
            address = _parse_address(payload.get("address"))
            frame = _parse_number(payload.get("frame"), "frame")
            color = _parse_hex(payload.get("color"), "color")
            ramp = payload.get("ramp", DEFAULT_RAMP)
            ramp = _parse_number(ramp, "ramp")
            if ramp < 1:
                raise _BadRequest("ramp must be at least one frame")
            new_doc, changed = apply_frame_isolated(doc, address, frame, color, ramp)
            command = EditCommand(
                "frame_isolated",
                doc,
                new_doc,
                {},
                changed,
                {"frame": frame, "color": color.to_hex(), "ramp": ramp},
            )
        else:
            raise _BadRequest(
                "edit kind must be one of: set_rgb, group_shift, frame_isolated"
            )
        session.log.push(command)
        self._refresh_after_edit(session, command)
        self._persist_action(session.id, {"op": "edit", "body": payload})
        return {
            "mapping": {o.to_hex(): n.to_hex() for o, n in command.mapping.items()},
            "changed_addresses": [a.to_json() for a in command.changed],
            "log_depth": len(session.log.applied),
        }

    def _group_for(self, session: Session, payload: dict) -> ColorGroup:
        if "members" in payload:
            hexes = payload["members"]
            if not isinstance(hexes, list):
                raise _BadRequest("members must be a list of hex colors")
            colors = [_parse_hex(h) for h in hexes]
            self._require_present(session, colors)
            return group_manual(colors)
        if session.selection is None:
            raise EmptyGroup("no selection; pass members or select colors first")
        return session.selection

    @staticmethod
    def _shift_for(payload: dict) -> HslShift:
        channels = [c for c in ("hue", "saturation", "lightness") if c in payload]
        if "channel" in payload:
            delta = _parse_number(payload.get("delta"), "delta")
            try:
                return HslShift(payload["channel"], delta)
            except ValueError as exc:
                raise _BadRequest(str(exc)) from exc
        if len(channels) != 1:
            raise _BadRequest(
                "group_shift needs exactly one of hue/saturation/lightness"
            )
        channel = channels[0]
        return HslShift(channel, _parse_number(payload[channel], channel))

    def apply_undo(self, session: Session) -> dict:
        command = session.log.undo()
        self._restore_before(session, command)
        self._persist_action(session.id, {"op": "undo"})
        return {"log_depth": len(session.log.applied)}

    # -- persistence ---------------------------------------------------------

    def _session_dir(self, session_id: str) -> Optional[Path]:
        return self._persist_root / session_id if self._persist_root else None

    def _persist_upload(self, session_id: str, raw_document):
        folder = self._session_dir(session_id)
        if folder is None:
            return
        folder.mkdir(parents=True, exist_ok=True)
        (folder / "upload.json").write_text(
            json.dumps(raw_document), encoding="utf-8"
        )

    def _persist_action(self, session_id: str, record: dict):
        folder = self._session_dir(session_id)
        if folder is None or self._replaying or not folder.exists():
            return
        with (folder / "log.jsonl").open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(record) + "\n")

    def _replay_all(self):
        self._replaying = True
        try:
            self._replay_sessions()
        finally:
            self._replaying = False

    def _replay_sessions(self):
        for folder in sorted(self._persist_root.iterdir()):
            upload = folder / "upload.json"
            if not folder.is_dir() or not upload.exists():
                continue
            raw = json.loads(upload.read_text(encoding="utf-8"))
            session = self.create(raw, session_id=folder.name)
            log_file = folder / "log.jsonl"
            if not log_file.exists():
                continue
            for line in log_file.read_text(encoding="utf-8").splitlines():
                if not line.strip():
                    continue
                record = json.loads(line)
                if record["op"] == "selection":
                    self.apply_selection(session, record["body"])
                elif record["op"] == "edit":
                    self.apply_edit(session, record["body"])
                elif record["op"] == "undo":
                    self.apply_undo(session)

    # -- serialization --------------------------------------------------------

    def state_json(
        self,
        session: Session,
        zoom: Optional[float] = None,
        step: Optional[float] = None,
    ) -> dict:
        palette = session.palette
        if step is not None and step != palette.step:
            doc = session.document
            bounds = (doc.in_point, doc.out_point, doc.frame_rate)
            palette = build_palette(
                session.occurrence_set,
                bounds,
                step=step,
                alpha=palette.alpha,
                order=palette.order,
                alpha_min=palette.alpha_min,
                alpha_max=palette.alpha_max,
            )
        if zoom is not None:
            palette = rezoom(palette, zoom)
        doc = session.document
        return {
            "session_id": session.id,
            "document": {
                "frame_rate": doc.frame_rate,
                "in_point": doc.in_point,
                "out_point": doc.out_point,
                "width": doc.width,
                "height": doc.height,
                "layers": len(doc.layers),
            },
            "theme": [s.to_json() for s in session.theme],
            "palette": palette_to_json(palette),
            "elements": [e.to_json() for e in session.elements],
            "selection": _selection_json(session),
            "playhead": session.playhead,
            "log_depth": len(session.log.applied),
            "warnings": list(session.occurrence_set.warnings),
        }

    def summary_json(self, session: Session) -> dict:
        return {
            "session_id": session.id,
            "layers": len(session.document.layers),
            "occurrences": len(session.occurrence_set.occurrences),
            "distinct_colors": len(
                {o.color for o in session.occurrence_set.occurrences}
            ),
            "theme": [s.to_json() for s in session.theme],
            "log_depth": len(session.log.applied),
        }


def create_app(config: ServiceConfig = ServiceConfig()) -> FastAPI:
    app = FastAPI(title="lottiecolor session service")
    store = SessionStore(config)
    app.state.store = store

    @app.exception_handler(LottieColorError)
    def _domain_error(request: Request, exc: LottieColorError):
        status = _STATUS_BY_CODE.get(exc.code, 400)
        return JSONResponse(
            {"error": exc.code, "message": str(exc)}, status_code=status
        )

    @app.post("/sessions", status_code=201)
    def create_session(payload: dict = Body(...)):
        if not isinstance(payload, dict):
            raise _BadRequest("body must be a JSON object")
        raw = payload.get("document", payload)
        if not isinstance(raw, dict):
            raise _BadRequest("document must be a JSON object")
        session = store.create(raw)
        return store.summary_json(session)

    @app.get("/sessions/{session_id}/state")
    def get_state(
        session_id: str,
        zoom: Optional[float] = None,
        step: Optional[float] = None,
        playhead: Optional[float] = None,
    ):
        session = store.get(session_id)
        with session.lock:
            if playhead is not None:
                doc = session.document
                if not doc.in_point <= playhead <= doc.out_point:
                    raise _BadRequest(
                        f"playhead {playhead} outside "
                        f"[{doc.in_point}, {doc.out_point}]"
                    )
                session.playhead = playhead
            return store.state_json(session, zoom=zoom, step=step)

    @app.post("/sessions/{session_id}/selection")
    def post_selection(session_id: str, payload: dict = Body(...)):
        session = store.get(session_id)
        with session.lock:
            return {"selection": store.apply_selection(session, payload)}

    @app.post("/sessions/{session_id}/edits")
    def post_edit(session_id: str, payload: dict = Body(...)):
        session = store.get(session_id)
        with session.lock:
            return store.apply_edit(session, payload)

    @app.post("/sessions/{session_id}/undo")
    def post_undo(session_id: str):
        session = store.get(session_id)
        with session.lock:
            result = store.apply_undo(session)
            result.update(store.summary_json(session))
            return result

    @app.get("/sessions/{session_id}/export")
    def get_export(session_id: str):
        session = store.get(session_id)
        with session.lock:
            body = serialize_document(session.document)
        return Response(content=body, media_type="application/json")

    if config.ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app
