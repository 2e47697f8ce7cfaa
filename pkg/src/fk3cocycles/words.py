"""Normal forms for the quadratic algebras on three generators.

All three algebras in play (FK3 itself and the two families of cleft
objects) share the same leading-word structure: the squares and the two
"cyclic sum" relations rewrite the six forbidden 2-letter patterns, and
resolving their overlaps once produces three derived 3-letter rules.
After completion the irreducible words are exactly the fixed 12-word
basis.  Confluence is not assumed: every overlap ambiguity is re-checked
after completion, and the callers certify the result further with rank
and associativity sweeps.
"""

#: the shared 12-word basis, in the fixed order
BASIS_WORDS = (
    (), (0,), (1,), (2,),
    (2, 0), (0, 2), (1, 0), (0, 1),
    (0, 1, 0), (2, 0, 2), (2, 0, 1),
    (2, 0, 1, 0),
)

WORD_INDEX = {w: i for i, w in enumerate(BASIS_WORDS)}

_BASIS_SET = frozenset(BASIS_WORDS)


class RewriteSystem:
    """Deterministic leftmost-first rewriting to the 12-word basis.

    rules maps a forbidden subword to a dict {replacement word: coeff};
    coefficients may be rationals or Poly values, as long as they add and
    multiply with each other.  Degree-3 rules are derived from the
    overlaps of the quadratic ones.
    """

    def __init__(self, deg2_rules):
        self.rules = {tuple(k): dict(v) for k, v in deg2_rules.items()}
        self._memo = {}
        self._strict = False
        self._complete()
        self._strict = True
        self._memo.clear()

    # -- completion ----------------------------------------------------

    def _complete(self):
        for _ in range(8):
            new_rule = None
            for word, left, right in self._overlap_words():
                d = self._sub(self._reduce_dict(left),
                              self._reduce_dict(right))
                if not d:
                    continue
                top = max(len(w) for w in d)
                heads = [w for w in d if len(w) == top and w not in _BASIS_SET]
                if len(heads) != 1:
                    raise AssertionError(
                        f"ambiguous completion at overlap {word}: {d}")
                head = heads[0]
                c = d.pop(head)
                if c == 1:
                    rhs = {w: -v for w, v in d.items()}
                elif c == -1:
                    rhs = dict(d)
                else:
                    raise AssertionError(f"non-unit head coefficient {c}")
                new_rule = (head, rhs)
                break
            if new_rule is None:
                self._memo.clear()
                return
            self.rules[new_rule[0]] = new_rule[1]
            self._memo.clear()
        raise AssertionError("completion did not stabilize")

    def _overlap_words(self):
        """All ambiguities: for each overlap/containment of two rule
        left-hand sides, the word plus its two one-step rewrites."""
        out = []
        for l1, r1 in self.rules.items():
            for l2, r2 in self.rules.items():
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] == l2[:k]:
                        word = l1 + l2[k:]
                        left = _apply(r1, (), l2[k:])
                        right = _apply(r2, l1[:-k], ())
                        out.append((word, left, right))
                if len(l2) < len(l1):
                    for p in range(len(l1) - len(l2) + 1):
                        if l1[p:p + len(l2)] == l2:
                            left = _apply(r1, (), ())
                            right = _apply(r2, l1[:p], l1[p + len(l2):])
                            out.append((l1, left, right))
        return out

    def check_confluence(self):
        """Re-resolve every ambiguity through full normal forms."""
        for word, left, right in self._overlap_words():
            if self._sub(self._reduce_dict(left), self._reduce_dict(right)):
                raise AssertionError(f"non-confluent overlap at {word}")
        return True

    # -- reduction -------------------------------------------------------

    def normal_form(self, word):
        """dict {basis word: coeff} for an arbitrary word in the letters."""
        word = tuple(word)
        out = self._memo.get(word)
        if out is None:
            out = self._nf(word, 0)
            self._memo[word] = out
        return out

    def _nf(self, word, depth):
        if depth > 512:
            raise AssertionError("rewriting recursion exceeded its bound")
        cached = self._memo.get(word)
        if cached is not None:
            return cached
        for p in range(len(word)):
            for L in (2, 3):
                rhs = self.rules.get(word[p:p + L])
                if rhs is None:
                    continue
                acc = {}
                for w, c in rhs.items():
                    red = self._nf(word[:p] + w + word[p + L:], depth + 1)
                    for bw, bc in red.items():
                        s = acc.get(bw, 0) + c * bc
                        if s:
                            acc[bw] = s
                        else:
                            acc.pop(bw, None)
                self._memo[word] = acc
                return acc
        if self._strict and word not in _BASIS_SET:
            raise AssertionError(f"irreducible word {word} outside the basis")
        return {word: 1}

    def _reduce_dict(self, d):
        acc = {}
        for w, c in d.items():
            for bw, bc in self.normal_form(w).items():
                s = acc.get(bw, 0) + c * bc
                if s:
                    acc[bw] = s
                else:
                    acc.pop(bw, None)
        return acc

    @staticmethod
    def _sub(d1, d2):
        out = dict(d1)
        for w, c in d2.items():
            s = out.get(w, 0) - c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return out


def _apply(rhs, prefix, suffix):
    return {prefix + w + suffix: c for w, c in rhs.items()}
