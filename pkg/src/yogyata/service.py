"""HTTP facade over the lexicon, rule store, analyzer, and transliterator.

The service adds no business logic: every response body is the serialized
result of the corresponding library call, so driving both paths against
the same state must produce identical payloads. Reads are open;
mutations require a bearer token from POST /login.
"""

from __future__ import annotations

import base64
import binascii
import bisect
import datetime as dt
import hashlib
import hmac
import json
import re
import secrets
from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .analyzer import (
    disambiguation_to_document,
    report_to_document,
    sentence_from_document,
)
from .config import AppConfig
from .errors import (
    AnalysisError,
    AuthenticationError,
    DuplicateRuleError,
    MissingSandhiError,
    NoAnalysisError,
    NotFoundError,
    ParseError,
    RangeError,
    UnknownLexemeError,
    ValidationError,
)
from .jsonio import read_document
from .lexicon import KarakaRole, dhatu_record, lexeme_record, role_ids
from .runtime import Runtime, load_runtime
from .translit import Scheme, convert

MAX_PAGE_LIMIT = 500


class ApiError(Exception):
    """Carries an HTTP status and a ready-to-send JSON payload."""

    def __init__(self, status: int, payload: dict):
        self.status = status
        self.payload = payload
        super().__init__(payload.get("detail", ""))


def _error(status: int, code: str, detail: str, **extra) -> ApiError:
    payload = {"error": code, "detail": detail}
    payload.update(extra)
    return ApiError(status, payload)


# ---------------------------------------------------------------------------
# Accounts and sessions
# ---------------------------------------------------------------------------


@dataclass
class Session:
    token: str
    annotator: str
    expires_at: dt.datetime


class SessionManager:
    def __init__(self, accounts_file: Path, ttl_hours: float):
        self._accounts = self._load_accounts(accounts_file)
        self._ttl = dt.timedelta(hours=ttl_hours)
        self._sessions: dict[str, Session] = {}

    @staticmethod
    def _load_accounts(path: Path) -> dict[str, dict]:
        if not path.exists():
            raise NotFoundError(
                f"accounts file {str(path)!r} not found; run `yogyata seed` "
                f"or point YOGYATA_ACCOUNTS_FILE at one")
        doc = read_document(path, "accounts")
        accounts = {}
        for record in doc.get("accounts", []):
            accounts[record["annotator"]] = record
        return accounts

    def login(self, annotator: str, password: str) -> Session:
        record = self._accounts.get(annotator)
        if record is None:
            raise AuthenticationError("unknown annotator or wrong password")
        digest = hashlib.pbkdf2_hmac(
            "sha256", password.encode("utf-8"),
            bytes.fromhex(record["salt"]), int(record["iterations"]))
        if not hmac.compare_digest(digest.hex(), record["hash"]):
            raise AuthenticationError("unknown annotator or wrong password")
        session = Session(
            token=secrets.token_urlsafe(24),
            annotator=annotator,
            expires_at=dt.datetime.now(dt.timezone.utc) + self._ttl,
        )
        self._sessions[session.token] = session
        return session

    def require(self, request: Request) -> Session:
        header = request.headers.get("authorization", "")
        if not header.lower().startswith("bearer "):
            raise AuthenticationError("missing bearer token")
        token = header.split(" ", 1)[1].strip()
        session = self._sessions.get(token)
        if session is None:
            raise AuthenticationError("unknown session token")
        if dt.datetime.now(dt.timezone.utc) >= session.expires_at:
            del self._sessions[token]
            raise AuthenticationError("session expired")
        return session

    def expire_now(self, token: str) -> None:
        """Test hook: force a session to be expired."""
        if token in self._sessions:
            self._sessions[token].expires_at = dt.datetime.now(dt.timezone.utc)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------


async def _json_body(request: Request, status: int = 400) -> dict:
    raw = await request.body()
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise _error(status, "parse", f"request body is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise _error(status, "parse", "request body must be a JSON object")
    return doc


def _field(body: dict, key: str, status: int = 422):
    if key not in body or body[key] is None:
        raise _error(status, "validation", f"missing field {key!r}", field=key)
    return body[key]


def _encode_cursor(key: str) -> str:
    return base64.urlsafe_b64encode(key.encode("utf-8")).decode("ascii").rstrip("=")


_CURSOR_CHARS = re.compile(r"[A-Za-z0-9_=-]+\Z")


def _decode_cursor(cursor: str) -> str:
    # b64decode silently drops foreign characters, so screen them first.
    if not _CURSOR_CHARS.fullmatch(cursor):
        raise _error(400, "bad-cursor", "malformed cursor")
    padded = cursor + "=" * (-len(cursor) % 4)
    try:
        return base64.urlsafe_b64decode(padded.encode("ascii")).decode("utf-8")
    except (binascii.Error, UnicodeDecodeError) as exc:
        raise _error(400, "bad-cursor", f"malformed cursor: {exc}")


def _page(keys: list[str], request: Request) -> tuple[list[str], str | None]:
    """Slice sorted keys after the cursor position; pages default to one item."""
    raw_limit = request.query_params.get("limit")
    if raw_limit is None:
        limit = 1
    else:
        try:
            limit = int(raw_limit)
        except ValueError:
            raise _error(400, "bad-limit", f"limit must be an integer, got {raw_limit!r}")
        if limit < 1 or limit > MAX_PAGE_LIMIT:
            raise _error(400, "bad-limit", f"limit must lie in 1..{MAX_PAGE_LIMIT}")
    cursor = request.query_params.get("cursor")
    start = bisect.bisect_right(keys, _decode_cursor(cursor)) if cursor else 0
    page = keys[start:start + limit]
    next_cursor = _encode_cursor(page[-1]) if page and start + limit < len(keys) else None
    return page, next_cursor


def _lword_record(l_word) -> dict:
    return {"prefix": l_word.prefix, "dhatu": l_word.dhatu,
            "sandhi_form": l_word.sandhi_form, "display": l_word.display()}


def relations_document(headword: str, relations) -> dict:
    return {
        "headword": headword,
        "relations": [
            {**_lword_record(l_word),
             "senses": {str(sense_id): role_ids(roles)
                        for sense_id, roles in sorted(by_sense.items())}}
            for l_word, by_sense in relations.items()
        ],
    }


# ---------------------------------------------------------------------------
# Application factory
# ---------------------------------------------------------------------------


def create_app(config: AppConfig | None = None, runtime: Runtime | None = None) -> FastAPI:
    config = config or AppConfig()
    runtime = runtime or load_runtime(config.data_dir)
    sessions = SessionManager(config.resolved_accounts_file(), config.session_ttl_hours)

    app = FastAPI(title="yogyata annotation service", docs_url=None, redoc_url=None)
    app.state.config = config
    app.state.runtime = runtime
    app.state.sessions = sessions
    lexicon = runtime.lexicon
    store = runtime.rulestore
    analyzer = runtime.analyzer

    @app.exception_handler(ApiError)
    async def _api_error(_request, exc: ApiError):
        return JSONResponse(exc.payload, status_code=exc.status)

    @app.exception_handler(AuthenticationError)
    async def _auth_error(_request, exc: AuthenticationError):
        return JSONResponse({"error": "unauthorized", "detail": str(exc)},
                            status_code=401)

    # -- sessions --------------------------------------------------------

    @app.post("/login")
    async def login(request: Request):
        body = await _json_body(request, status=400)
        annotator = _field(body, "annotator", status=400)
        password = _field(body, "password", status=400)
        session = sessions.login(str(annotator), str(password))
        return {"token": session.token, "annotator": session.annotator,
                "expires_at": session.expires_at.isoformat()}

    # -- inventories -----------------------------------------------------

    @app.get("/prefixes")
    async def prefixes():
        return {"prefixes": [p.form for p in lexicon.prefixes]}

    @app.get("/dhatus")
    async def dhatus(request: Request):
        page, next_cursor = _page(lexicon.dhatu_roots(), request)
        return {"items": [dhatu_record(lexicon.get_dhatu(root)) for root in page],
                "next_cursor": next_cursor}

    @app.get("/words")
    async def words(request: Request):
        page, next_cursor = _page(lexicon.headwords(), request)
        return {"items": [lexeme_record(lexicon.get_lexeme(h)) for h in page],
                "next_cursor": next_cursor}

    # -- rules -----------------------------------------------------------

    @app.post("/rules", status_code=201)
    async def create_rule(request: Request):
        session = sessions.require(request)
        body = await _json_body(request, status=422)
        dhatu = _field(body, "dhatu")
        headword = _field(body, "headword")
        sense_id = _field(body, "sense_id")
        roles = _field(body, "roles")
        if not isinstance(roles, list) or not roles:
            raise _error(422, "validation", "'roles' must be a non-empty list",
                         field="roles")
        try:
            sense_id = int(sense_id)
        except (TypeError, ValueError):
            raise _error(422, "validation", "'sense_id' must be an integer",
                         field="sense_id")
        try:
            l_word = lexicon.compose_lword(
                prefix=body.get("prefix"), root=str(dhatu),
                sandhi_form=body.get("sandhi_form"),
                changed_artha=body.get("changed_artha"))
            rule = store.create_rule(
                l_word=l_word, headword=str(headword), sense_id=sense_id,
                roles=[str(r) for r in roles], comment=body.get("comment"),
                annotator=session.annotator)
        except NotFoundError as exc:
            raise _error(404, "not-found", str(exc))
        except MissingSandhiError as exc:
            raise _error(422, "validation", str(exc), field="sandhi_form")
        except DuplicateRuleError as exc:
            raise _error(409, "duplicate-rule", str(exc))
        except ValidationError as exc:
            raise _error(422, "validation", str(exc), field="roles")
        return rule.to_record()

    @app.get("/rules")
    async def list_rules(request: Request):
        l = request.query_params.get("l") or None
        r = request.query_params.get("r") or None
        rules = store.get_rules(l_word=l, headword=r)
        return {"rules": [rule.to_record() for rule in rules]}

    @app.delete("/rules/{rule_id}")
    async def delete_rule(rule_id: str, request: Request):
        session = sessions.require(request)
        try:
            return store.delete_rule(rule_id, annotator=session.annotator)
        except NotFoundError as exc:
            raise _error(404, "not-found", str(exc))

    # -- query views -----------------------------------------------------

    @app.get("/lexemes/{headword}/relations")
    async def lexeme_relations(headword: str):
        try:
            relations = store.relations_for_lexeme(headword)
        except NotFoundError as exc:
            raise _error(404, "not-found", str(exc))
        return relations_document(headword, relations)

    @app.get("/karakas/{role}/dhatus")
    async def karaka_dhatus(role: str):
        try:
            parsed = KarakaRole.parse(role)
        except ValidationError as exc:
            raise _error(404, "not-found", str(exc))
        l_words = store.dhatus_for_karaka(parsed)
        return {"role": parsed.value, "label": parsed.label,
                "l_words": [_lword_record(lw) for lw in l_words]}

    # -- analysis and transliteration ------------------------------------

    @app.post("/analyze")
    async def analyze(request: Request):
        body = await _json_body(request, status=400)
        sentence_doc = _field(body, "sentence", status=400)
        mode = body.get("mode", "permissive")
        try:
            sentence = sentence_from_document(sentence_doc)
            ranked, report = analyzer.disambiguate(sentence, mode=str(mode))
        except NoAnalysisError as exc:
            raise ApiError(422, {
                "error": "no-analysis",
                "detail": str(exc),
                "report": report_to_document(exc.report),
            })
        except (ParseError, ValidationError, AnalysisError, RangeError,
                UnknownLexemeError, NotFoundError) as exc:
            raise _error(400, "bad-sentence", str(exc))
        return disambiguation_to_document(ranked, report)

    @app.post("/transliterate")
    async def transliterate_endpoint(request: Request):
        body = await _json_body(request, status=400)
        text = _field(body, "text", status=400)
        source = _field(body, "from", status=400)
        target = _field(body, "to", status=400)
        try:
            result = convert(str(text), Scheme.parse(source), Scheme.parse(target))
        except ValidationError as exc:
            raise _error(400, "bad-scheme", str(exc))
        return {"text": result.text, "flagged": list(result.flagged)}

    return app


def serve(config: AppConfig) -> None:
    """Run the service under uvicorn (blocking)."""
    import uvicorn

    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
