"""Operator command line: seeding, analysis, rule CRUD, queries, serving.

Exit codes: 0 success, 1 domain/validation failure, 2 usage error
(argparse), 3 I/O failure. Most commands take ``--format human`` for
eyeballing or ``--format machine`` for stable JSON.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import seeds, service
from .analyzer import disambiguation_to_document, sentence_from_json
from .config import load_config
from .errors import NoAnalysisError, YogyataError
from .jsonio import canonical_dumps
from .lexicon import KarakaRole, sort_roles
from .runtime import load_runtime
from .service import relations_document
from .translit import Scheme, convert

HUMAN = "human"
MACHINE = "machine"


def _add_data_dir(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data-dir", default=None,
                        help="data directory (default: $YOGYATA_DATA_DIR or ./yogyata-data)")


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=(HUMAN, MACHINE), default=HUMAN,
                        help="human-readable text or stable JSON")
    parser.add_argument("--output", default=None,
                        help="write the result here instead of stdout")


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _config(args):
    return load_config(data_dir=getattr(args, "data_dir", None))


def _runtime(args):
    return load_runtime(_config(args).data_dir)


def _role_labels(roles) -> str:
    return ", ".join(r.label for r in sort_roles(roles))


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------


def cmd_seed(args) -> int:
    counts = seeds.write_seed(_config(args).data_dir)
    if args.format == MACHINE:
        _emit(args, canonical_dumps(counts))
    else:
        lines = [f"{name}: {count}" for name, count in counts.items()]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_analyze(args) -> int:
    runtime = _runtime(args)
    sentence = sentence_from_json(Path(args.sentence).read_text(encoding="utf-8"))
    try:
        ranked, report = runtime.analyzer.disambiguate(sentence, mode=args.mode)
    except NoAnalysisError as exc:
        print(f"no analysis survived pruning "
              f"({len(exc.report.pruned)} candidates pruned):", file=sys.stderr)
        for decision in exc.report.pruned:
            just = decision.justification
            print(f"  - {just.kind}: {just.detail}", file=sys.stderr)
        return 1
    if args.format == MACHINE:
        _emit(args, canonical_dumps(disambiguation_to_document(ranked, report)))
        return 0
    lines = []
    for rank, resolved in enumerate(ranked, start=1):
        analysis = resolved.analysis
        parts = []
        for hyp in analysis.labels:
            surface = sentence.tokens[hyp.token].surface
            label = hyp.label
            if hasattr(label, "role"):
                parts.append(f"{surface} → {label.role.label}")
            else:
                parts.append(f"{surface} qualifies {sentence.tokens[label.head].surface}")
        unfilled = _role_labels(analysis.unfilled) or "none"
        senses = ", ".join(f"{stem}={sid}" for stem, sid in resolved.senses) or "-"
        lines.append(f"{rank}. verb {analysis.verb.root} | "
                     f"{'; '.join(parts) or 'no labels'} | "
                     f"unfilled: {unfilled} | senses: {senses} | "
                     f"rule-backed: {resolved.rule_backed}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _rule_line(rule) -> str:
    line = (f"{rule.id}  {rule.l_word.display()} / {rule.headword}"
            f"[{rule.sense_id}] → {_role_labels(rule.roles)}"
            f"  ({rule.annotator}, {rule.created_at.isoformat()})")
    if rule.comment:
        line += f"  # {rule.comment}"
    return line


def cmd_rules_list(args) -> int:
    runtime = _runtime(args)
    rules = runtime.rulestore.get_rules(l_word=args.l, headword=args.r)
    if args.format == MACHINE:
        _emit(args, canonical_dumps({"rules": [r.to_record() for r in rules]}))
    else:
        _emit(args, "\n".join(_rule_line(r) for r in rules) + "\n" if rules else "no rules\n")
    return 0


def cmd_rules_add(args) -> int:
    runtime = _runtime(args)
    l_word = runtime.lexicon.compose_lword(
        prefix=args.prefix, root=args.dhatu,
        sandhi_form=args.sandhi_form, changed_artha=args.changed_artha)
    roles = [part.strip() for part in args.roles.split(",") if part.strip()]
    rule = runtime.rulestore.create_rule(
        l_word=l_word, headword=args.headword, sense_id=args.sense_id,
        roles=roles, comment=args.comment, annotator=args.annotator)
    if args.format == MACHINE:
        _emit(args, canonical_dumps(rule.to_record()))
    else:
        _emit(args, f"created {rule.id}\n{_rule_line(rule)}\n")
    return 0


def cmd_rules_del(args) -> int:
    runtime = _runtime(args)
    runtime.rulestore.delete_rule(args.id, annotator=args.annotator)
    if args.format == MACHINE:
        _emit(args, canonical_dumps({"deleted": args.id}))
    else:
        _emit(args, f"deleted {args.id}\n")
    return 0


def cmd_query_lexeme(args) -> int:
    runtime = _runtime(args)
    relations = runtime.rulestore.relations_for_lexeme(args.headword)
    if args.format == MACHINE:
        _emit(args, canonical_dumps(relations_document(args.headword, relations)))
        return 0
    lexeme = runtime.lexicon.get_lexeme(args.headword)
    lines = [args.headword]
    for l_word, by_sense in relations.items():
        lines.append(f"  {l_word.display()}:")
        for sense_id in sorted(by_sense):
            gloss = lexeme.sense(sense_id).gloss
            lines.append(f"    sense {sense_id} ({gloss}): {_role_labels(by_sense[sense_id])}")
    if not relations:
        lines.append("  no rules recorded")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_query_karaka(args) -> int:
    runtime = _runtime(args)
    role = KarakaRole.parse(args.role)
    l_words = runtime.rulestore.dhatus_for_karaka(role)
    if args.format == MACHINE:
        doc = {"role": role.value, "label": role.label,
               "l_words": [{"prefix": lw.prefix, "dhatu": lw.dhatu,
                            "sandhi_form": lw.sandhi_form, "display": lw.display()}
                           for lw in l_words]}
        _emit(args, canonical_dumps(doc))
        return 0
    lines = [f"{role.label}:"]
    lines.extend(f"  {lw.display()}" for lw in l_words)
    if not l_words:
        lines.append("  no rules recorded")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_serve(args) -> int:
    config = load_config(config_file=args.config, data_dir=args.data_dir,
                         host=args.host, port=args.port)
    service.serve(config)
    return 0


def cmd_translit(args) -> int:
    if args.input:
        text = Path(args.input).read_text(encoding="utf-8")
    elif args.text is not None:
        text = args.text
    else:
        text = sys.stdin.read()
    result = convert(text, Scheme.parse(args.from_scheme), Scheme.parse(args.to_scheme))
    if args.format == MACHINE:
        _emit(args, canonical_dumps({"text": result.text, "flagged": list(result.flagged)}))
        return 0
    if result.flagged:
        print(f"passed through unmapped: {' '.join(sorted(set(result.flagged)))}",
              file=sys.stderr)
    _emit(args, result.text)
    return 0


def cmd_export(args) -> int:
    runtime = _runtime(args)
    _emit(args, runtime.rulestore.export_rules())
    return 0


def cmd_import(args) -> int:
    runtime = _runtime(args)
    count = runtime.rulestore.import_rules(
        Path(args.file).read_text(encoding="utf-8"))
    if args.format == MACHINE:
        _emit(args, canonical_dumps({"imported": count}))
    else:
        _emit(args, f"imported {count} rules\n")
    return 0


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yogyata",
        description="Karaka-role compatibility engine: seed data, analyze "
                    "sentences, manage annotation rules, serve the HTTP API.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seed", help="write the seed data directory")
    _add_data_dir(p)
    _add_format(p)
    p.set_defaults(handler=cmd_seed)

    p = sub.add_parser("analyze", help="analyze a sentence document")
    p.add_argument("sentence", help="path to a sentence JSON document")
    p.add_argument("--mode", choices=("permissive", "strict"), default="permissive")
    _add_data_dir(p)
    _add_format(p)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("rules", help="list, add, or delete rules")
    rules_sub = p.add_subparsers(dest="action", required=True)

    pl = rules_sub.add_parser("list", help="list active rules")
    pl.add_argument("--l", default=None, help="filter by L-word sandhi form")
    pl.add_argument("--r", default=None, help="filter by headword")
    _add_data_dir(pl)
    _add_format(pl)
    pl.set_defaults(handler=cmd_rules_list)

    pa = rules_sub.add_parser("add", help="create a rule")
    pa.add_argument("--dhatu", required=True)
    pa.add_argument("--prefix", default=None)
    pa.add_argument("--sandhi-form", default=None, dest="sandhi_form")
    pa.add_argument("--changed-artha", default=None, dest="changed_artha")
    pa.add_argument("--headword", required=True)
    pa.add_argument("--sense-id", required=True, type=int, dest="sense_id")
    pa.add_argument("--roles", required=True,
                    help="comma-separated role names (e.g. karta,apadana)")
    pa.add_argument("--comment", default=None)
    pa.add_argument("--annotator", default="cli")
    _add_data_dir(pa)
    _add_format(pa)
    pa.set_defaults(handler=cmd_rules_add)

    pd = rules_sub.add_parser("del", help="soft-delete a rule by id")
    pd.add_argument("id")
    pd.add_argument("--annotator", default="cli")
    _add_data_dir(pd)
    _add_format(pd)
    pd.set_defaults(handler=cmd_rules_del)

    p = sub.add_parser("query", help="aggregated views over the rules")
    query_sub = p.add_subparsers(dest="view", required=True)

    pq = query_sub.add_parser("lexeme", help="all relations for one headword")
    pq.add_argument("headword")
    _add_data_dir(pq)
    _add_format(pq)
    pq.set_defaults(handler=cmd_query_lexeme)

    pk = query_sub.add_parser("karaka", help="all L-words granting one role")
    pk.add_argument("role")
    _add_data_dir(pk)
    _add_format(pk)
    pk.set_defaults(handler=cmd_query_karaka)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default=None)
    p.add_argument("--port", default=None, type=int)
    p.add_argument("--config", default=None, help="path to a JSON config file")
    _add_data_dir(p)
    p.set_defaults(handler=cmd_serve)

    p = sub.add_parser("translit", help="transliterate text between schemes")
    p.add_argument("text", nargs="?", default=None)
    p.add_argument("--from", required=True, dest="from_scheme",
                   choices=tuple(s.value for s in Scheme))
    p.add_argument("--to", required=True, dest="to_scheme",
                   choices=tuple(s.value for s in Scheme))
    p.add_argument("--input", default=None, help="read text from this file")
    _add_format(p)
    p.set_defaults(handler=cmd_translit)

    p = sub.add_parser("export", help="export active rules as JSONL")
    _add_data_dir(p)
    _add_format(p)
    p.set_defaults(handler=cmd_export)

    p = sub.add_parser("import", help="import rules from a JSONL export")
    p.add_argument("file")
    _add_data_dir(p)
    _add_format(p)
    p.set_defaults(handler=cmd_import)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except YogyataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
