"""Trace files: the per-instant textual witness format.

    # bound <k>
    # vars <name> <name> ...
    <t> <value> <value> ...

One line per instant; propositions print as 0/1, finite variables print
their domain symbol.  Re-parsing against the scenario's symbol table
reconstructs the trace exactly; without a table, a column is read as a
proposition iff all of its values are 0/1.
"""

from __future__ import annotations

from .logic import SymbolTable, Trace

__all__ = ["TraceFormatError", "write_trace", "read_trace"]


class TraceFormatError(ValueError):
    pass


def write_trace(tr: Trace) -> str:
    names = list(tr.propositions) + list(tr.variables)
    lines = [f"# bound {tr.bound}\n", "# vars " + " ".join(names) + "\n"]
    for t in range(tr.bound + 1):
        values = ["1" if tr.propositions[n][t] else "0" for n in tr.propositions]
        values += [tr.variables[n][t] for n in tr.variables]
        lines.append(f"{t} " + " ".join(values) + "\n")
    return "".join(lines)


def read_trace(text: str, symbols: SymbolTable | None = None) -> Trace:
    bound: int | None = None
    names: list[str] | None = None
    rows: list[list[str]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if fields[:1] == ["bound"]:
                if len(fields) != 2 or not fields[1].isdigit():
                    raise TraceFormatError(f"line {lineno}: malformed bound header")
                bound = int(fields[1])
            elif fields[:1] == ["vars"]:
                names = fields[1:]
                if len(set(names)) != len(names):
                    raise TraceFormatError(f"line {lineno}: duplicate symbol in header")
            continue
        fields = line.split()
        if names is None or bound is None:
            raise TraceFormatError(f"line {lineno}: instant row before headers")
        if len(fields) != len(names) + 1:
            raise TraceFormatError(
                f"line {lineno}: expected {len(names) + 1} fields, found {len(fields)}"
            )
        if not fields[0].isdigit() or int(fields[0]) != len(rows):
            raise TraceFormatError(f"line {lineno}: instants must be consecutive from 0")
        rows.append(fields[1:])

    if bound is None or names is None:
        raise TraceFormatError("missing '# bound' or '# vars' header")
    if len(rows) != bound + 1:
        raise TraceFormatError(f"bound {bound} but {len(rows)} instant rows")

    columns = {name: [row[i] for row in rows] for i, name in enumerate(names)}
    props: dict[str, tuple[bool, ...]] = {}
    variables: dict[str, tuple[str, ...]] = {}
    for name, column in columns.items():
        if symbols is not None:
            symbol = symbols.lookup(name)
            if symbol is None:
                raise TraceFormatError(f"trace symbol {name!r} is not declared")
            is_prop = not hasattr(symbol, "domain")
            if not is_prop:
                for value in column:
                    if value not in symbol.domain:
                        raise TraceFormatError(
                            f"value {value!r} outside the domain of {name!r}"
                        )
        else:
            is_prop = all(value in ("0", "1") for value in column)
        if is_prop:
            for value in column:
                if value not in ("0", "1"):
                    raise TraceFormatError(f"proposition {name!r} has non-boolean value {value!r}")
            props[name] = tuple(value == "1" for value in column)
        else:
            variables[name] = tuple(column)
    return Trace(bound, props, variables)
