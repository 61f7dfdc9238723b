"""Small s-expression reader shared by the feature-structure and grammar parsers.

Forms are nested parenthesized lists of atoms and double-quoted strings.
A ``;`` outside a string starts a comment running to end of line. Inside
strings, ``\\"`` and ``\\\\`` are escapes; any other backslash is kept
literally so regular-expression patterns stay writable.
"""

from __future__ import annotations

import re


class QuotedString(str):
    """A string literal read from double quotes, as opposed to a bare atom."""

    __slots__ = ()


_ATOM = re.compile(r'[^\s()";]+')

# Atoms safe to print without quotes.
_BARE = re.compile(r'^[^\s()";]+$')


def format_atom(text):
    """Render a string as a bare atom when possible, quoted otherwise."""
    if _BARE.match(text):
        return text
    return quote(text)


def quote(text):
    """Render a string as a double-quoted literal."""
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _tokenize(text, error):
    tokens = []  # (kind, value, line); kind in {"(", ")", "atom", "string"}
    pos = 0
    line = 1
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch == "\n":
            line += 1
            pos += 1
        elif ch.isspace():
            pos += 1
        elif ch == ";":
            while pos < n and text[pos] != "\n":
                pos += 1
        elif ch in "()":
            tokens.append((ch, ch, line))
            pos += 1
        elif ch == '"':
            start_line = line
            pos += 1
            parts = []
            while True:
                if pos >= n:
                    raise error("unterminated string literal", start_line)
                ch = text[pos]
                if ch == '"':
                    pos += 1
                    break
                if ch == "\\" and pos + 1 < n:
                    nxt = text[pos + 1]
                    if nxt in ('"', "\\"):
                        parts.append(nxt)
                        pos += 2
                        continue
                if ch == "\n":
                    line += 1
                parts.append(ch)
                pos += 1
            tokens.append(("string", "".join(parts), start_line))
        else:
            m = _ATOM.match(text, pos)
            tokens.append(("atom", m.group(0), line))
            pos = m.end()
    return tokens


def read_forms(text, error):
    """Read all top-level forms from ``text``.

    Returns a list of ``(form, line)`` pairs where a form is an atom (str),
    a QuotedString, or a list of forms. ``error`` is the exception class to
    raise on syntax problems; it must accept ``(message, line)``.
    """
    tokens = _tokenize(text, error)
    forms = []
    stack = []  # (list, line) for every open paren
    for kind, value, line in tokens:
        if kind == "(":
            stack.append(([], line))
        elif kind == ")":
            if not stack:
                raise error("unbalanced parentheses: unexpected ')'", line)
            done, open_line = stack.pop()
            if stack:
                stack[-1][0].append(done)
            else:
                forms.append((done, open_line))
        else:
            item = QuotedString(value) if kind == "string" else value
            if stack:
                stack[-1][0].append(item)
            else:
                forms.append((item, line))
    if stack:
        raise error("unbalanced parentheses: unclosed '('", stack[-1][1])
    return forms
