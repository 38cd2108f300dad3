"""Listing of the small subpermutations of pi_T grouped by form."""

from __future__ import annotations

from .complexity import perm_set
from .typek import group_by_form

APPENDIX_LENGTHS = range(2, 10)


def form_lines(perms) -> list[str]:
    """One ``"form : [p] [q]"`` line per form, forms in lexicographic order."""
    lines = []
    for form, members in group_by_form(perms).items():
        body = " ".join(str(p) for p in members)
        lines.append(f"{form} : {body}" if form else body)
    return lines


def appendix_blocks(lengths=APPENDIX_LENGTHS) -> dict[int, list[str]]:
    return {n: form_lines(perm_set(n)) for n in lengths}


def render_appendix(lengths=APPENDIX_LENGTHS) -> str:
    """Blocks for each length, separated by blank lines."""
    blocks = appendix_blocks(lengths)
    return "\n\n".join("\n".join(lines) for lines in blocks.values()) + "\n"
