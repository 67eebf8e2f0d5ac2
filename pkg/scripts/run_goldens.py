#!/usr/bin/env python3
"""Run the two worked example sentences end to end and print every stage.

Uses the built-in seed data directly (no data directory needed), so it
doubles as a quick smoke check after changes:

    python3 scripts/run_goldens.py
    python3 scripts/run_goldens.py --mode strict
"""

import argparse
import json
import sys

from yogyata.analyzer import Analyzer, Karaka, sentence_from_document
from yogyata.errors import NoAnalysisError
from yogyata.rulestore import RuleStore
from yogyata.seeds import SENTENCE_SHITA, SENTENCE_YANA, seed_lexicon, seed_rule_records


def describe_statement(sentence, statement) -> str:
    parts = []
    for hyp in statement.parts:
        surface = sentence.tokens[hyp.token].surface
        if isinstance(hyp.label, Karaka):
            parts.append(f"{surface} as {hyp.label.role.label} (case {hyp.reading.case})")
        else:
            head = sentence.tokens[hyp.label.head].surface
            parts.append(f"{surface} qualifying {head}")
    return " + ".join(parts)


def describe_resolved(sentence, resolved, rank) -> str:
    analysis = resolved.analysis
    parts = []
    for hyp in analysis.labels:
        surface = sentence.tokens[hyp.token].surface
        if isinstance(hyp.label, Karaka):
            parts.append(f"{surface}={hyp.label.role.label}")
        else:
            parts.append(f"{surface} qualifies {sentence.tokens[hyp.label.head].surface}")
    unfilled = ", ".join(r.label for r in sorted(analysis.unfilled, key=lambda r: r.index))
    senses = ", ".join(f"{stem}:{sid}" for stem, sid in resolved.senses) or "-"
    return (f"  {rank}. {'; '.join(parts)}  [unfilled: {unfilled or 'none'}; "
            f"senses: {senses}; rule-backed: {resolved.rule_backed}]")


def run_sentence(analyzer, doc, mode: str) -> None:
    sentence = sentence_from_document(doc)
    surfaces = " ".join(tok.surface for tok in sentence.tokens)
    print(f"== {surfaces} ({mode}) ==")

    statements = analyzer.enumerate_hypotheses(sentence)
    print(f"candidate statements ({len(statements)}):")
    for i, statement in enumerate(statements, start=1):
        print(f"  {i}. {describe_statement(sentence, statement)}")

    analyses = analyzer.enumerate_analyses(sentence)
    print(f"total labelings before pruning: {len(analyses)}")

    try:
        ranked, report = analyzer.disambiguate(sentence, mode=mode)
    except NoAnalysisError as exc:
        print(f"no analysis survived; {len(exc.report.pruned)} pruned:")
        for decision in exc.report.pruned:
            print(f"  - {decision.justification.kind}: {decision.justification.detail}")
        print()
        return
    print(f"surviving analyses ({len(report.surviving)}), ranked:")
    for rank, resolved in enumerate(ranked, start=1):
        print(describe_resolved(sentence, resolved, rank))
    print()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--mode", choices=("permissive", "strict"),
                        default="permissive")
    parser.add_argument("--sentence", default=None,
                        help="path to a sentence JSON document to run instead")
    args = parser.parse_args(argv)

    lexicon = seed_lexicon()
    store = RuleStore(lexicon)
    store.import_rules("\n".join(json.dumps(r, ensure_ascii=False)
                                 for r in seed_rule_records()) + "\n")
    analyzer = Analyzer(lexicon, store)

    if args.sentence:
        with open(args.sentence, encoding="utf-8") as handle:
            run_sentence(analyzer, json.load(handle), args.mode)
        return 0
    for doc in (SENTENCE_YANA, SENTENCE_SHITA):
        run_sentence(analyzer, doc, args.mode)
    return 0


if __name__ == "__main__":
    sys.exit(main())
