#!/usr/bin/env python3
"""Builds oriented link diagrams from a left-to-right slice description and
emits them in the .lnk crossing-relation format.

A diagram is a sequence of events acting on horizontal strand levels
(level 0 is the bottom):

  ("x", i, "up"|"down")  crossing of levels i and i+1; the named strand
                          (rising or falling, read left to right) is over
  ("cup", i)              a new pair of strands appears at levels i, i+1
  ("cap", i)              strands at levels i, i+1 are joined
  ("axis",)               an unknotted component threading the band: it
                          passes over every level, then back under it

After the last event every level is joined to the same level at the start,
as in a diagram drawn on an annulus. Relations are derived from the
geometry: with d_o, d_u the directions of the over and under strands,
cross(d_o, d_u) > 0 gives out = in |> over, otherwise in = out |> over.
"""

import argparse
import itertools
import sys


class Diagram:
    def __init__(self, events, levels):
        self.nodes = []          # node -> list of port dicts
        self.edges = {}          # (node, port) -> (node, port)
        self.marks = []          # (label, level, pin node)
        self.build(events, levels)

    def add_node(self, kind, ports, over=None, under=None):
        self.nodes.append({"kind": kind, "ports": ports, "over": over, "under": under})
        return len(self.nodes) - 1

    def link(self, a, b):
        self.edges[a] = b
        self.edges[b] = a

    def build(self, events, levels):
        # Each level holds the open end (node, port) waiting to be connected
        # to whatever comes next on the right.
        start = [None] * levels
        ends = [None] * levels
        for lv in range(levels):
            n = self.add_node("pin", {"w": (-1, 0), "e": (1, 0)})
            start[lv] = (n, "w")
            ends[lv] = (n, "e")
        for ev in events:
            kind = ev[0]
            if kind == "x":
                _, i, who = ev
                ports = {"ll": (-1, -1), "lh": (-1, 1), "rl": (1, -1), "rh": (1, 1)}
                rising = ("ll", "rh")
                falling = ("lh", "rl")
                over, under = (rising, falling) if who == "up" else (falling, rising)
                n = self.add_node("x", ports, over, under)
                self.link(ends[i], (n, "ll"))
                self.link(ends[i + 1], (n, "lh"))
                ends[i], ends[i + 1] = (n, "rl"), (n, "rh")
            elif kind == "cup":
                _, i = ev
                n = self.add_node("cup", {"a": (1, 0), "b": (1, 0)})
                ends[i:i] = [(n, "a"), (n, "b")]
            elif kind == "cap":
                _, i = ev
                n = self.add_node("cap", {"a": (-1, 0), "b": (-1, 0)})
                self.link(ends[i], (n, "a"))
                self.link(ends[i + 1], (n, "b"))
                del ends[i:i + 2]
            elif kind == "mark":
                for lv in range(len(ends)):
                    n = self.add_node("pin", {"w": (-1, 0), "e": (1, 0)})
                    self.link(ends[lv], (n, "w"))
                    ends[lv] = (n, "e")
                    self.marks.append((ev[1], lv, n))
            elif kind == "axis":
                m = len(ends)
                top = []
                bot = []
                for lv in range(m):
                    # axis over the band, heading down
                    p = self.add_node("x", {"w": (-1, 0), "e": (1, 0), "n": (0, 1), "s": (0, -1)},
                                      ("n", "s"), ("w", "e"))
                    top.append(p)
                for lv in range(m):
                    # axis under the band, heading up
                    q = self.add_node("x", {"w": (-1, 0), "e": (1, 0), "n": (0, 1), "s": (0, -1)},
                                      ("w", "e"), ("s", "n"))
                    bot.append(q)
                for lv in range(m):
                    self.link(ends[lv], (top[lv], "w"))
                    self.link((top[lv], "e"), (bot[lv], "w"))
                    ends[lv] = (bot[lv], "e")
                for lv in range(m - 1):
                    self.link((top[lv + 1], "s"), (top[lv], "n"))
                    self.link((bot[lv], "n"), (bot[lv + 1], "s"))
                self.link((top[0], "s"), (bot[0], "s"))
                self.link((top[m - 1], "n"), (bot[m - 1], "n"))
            else:
                raise ValueError(ev)
        if len(ends) != len(start):
            raise ValueError("levels at the right do not match the left")
        for a, b in zip(ends, start):
            self.link(a, b)

    def partner(self, node, port):
        nd = self.nodes[node]
        if nd["kind"] in ("pin", "cup", "cap"):
            other = [p for p in nd["ports"] if p != port]
            return other[0]
        for pair in (nd["over"], nd["under"]):
            if port in pair:
                return pair[1] if pair[0] == port else pair[0]
        raise KeyError(port)

    def to_relations(self):
        """Traverses components; returns (arc_count, relations, component_of, signs)."""
        crossing_nodes = [i for i, n in enumerate(self.nodes) if n["kind"] == "x"]
        crossing_nodes += [i for i, n in enumerate(self.nodes) if n["kind"] != "x"]
        visited = set()
        self.pin_arc = {}
        passes = {}      # node -> {"over": (arc, exit_port), "under": (in_arc, out_arc, exit_port)}
        arc = -1
        component_of = []
        comp = -1
        order = []       # crossing nodes in order of first under-passage
        for startnode in crossing_nodes:
            for sp in self.nodes[startnode]["ports"]:
                if (startnode, sp) in visited:
                    continue
                # Walk the component starting by leaving startnode through sp.
                comp += 1
                walk = []
                node, port = startnode, sp
                while True:
                    # leaving (node, port)
                    visited.add((node, port))
                    nxt = self.edges[(node, port)]
                    node, inport = nxt
                    outport = self.partner(node, inport)
                    visited.add((node, inport))
                    walk.append((node, inport, outport))
                    port = outport
                    if (node, port) == (startnode, sp):
                        break
                    if (node, port) in visited and (node, port) != (startnode, sp):
                        raise RuntimeError("walk did not close")
                # rotate walk so it starts right after an undercrossing
                unders = [i for i, (n, a, b) in enumerate(walk)
                          if self.nodes[n]["kind"] == "x" and a in self.nodes[n]["under"]]
                if unders:
                    k = unders[-1] + 1
                    walk = walk[k:] + walk[:k]
                arc += 1
                component_of.append(comp)
                first_arc = arc
                for idx, (n, a, b) in enumerate(walk):
                    nd = self.nodes[n]
                    if nd["kind"] == "pin":
                        self.pin_arc[n] = arc
                    if nd["kind"] != "x":
                        continue
                    if a in nd["under"]:
                        last = idx == len(walk) - 1
                        out_arc = first_arc if last else arc + 1
                        passes.setdefault(n, {})["under"] = (arc, out_arc, b)
                        order.append(n)
                        if not last:
                            arc += 1
                            component_of.append(comp)
                    elif nd["kind"] == "x":
                        passes.setdefault(n, {})["over"] = (arc, b)
        relations = []
        signs = []
        for n in order:
            nd = self.nodes[n]
            over_arc, over_exit = passes[n]["over"]
            in_arc, out_arc, under_exit = passes[n]["under"]
            do = nd["ports"][over_exit]
            du = nd["ports"][under_exit]
            cross = do[0] * du[1] - do[1] * du[0]
            if cross > 0:
                relations.append((in_arc, over_arc, out_arc))
            else:
                relations.append((out_arc, over_arc, in_arc))
            signs.append(1 if cross > 0 else -1)
        return arc + 1, relations, component_of, signs, order


def to_lnk(name, arcs, relations):
    lines = ["link %s arcs %d" % (name, arcs)]
    for a, b, c in relations:
        lines.append("x %d %d %d" % (a + 1, b + 1, c + 1))
    return "\n".join(lines) + "\n"


# --- small independent checker used while designing the data --------------

def dihedral_conj(n):
    el = [(s, k) for s in (0, 1) for k in range(n)]

    def mul(a, b):
        return (a[0] ^ b[0], ((-a[1] if b[0] else a[1]) + b[1]) % n)

    def inv(a):
        return a if a[0] else (0, (-a[1]) % n)

    code = {e: i for i, e in enumerate(el)}
    return [[code[mul(mul(inv(b), a), b)] for b in el] for a in el]


def count_colorings(arcs, relations, q):
    """Plain backtracking in arc order; returns {image size: count}."""
    m = len(q)
    by_max = {}
    for r in relations:
        by_max.setdefault(max(r), []).append(r)
    x = [0] * arcs
    tally = {}

    def rec(i):
        if i == arcs:
            s = len(set(x))
            tally[s] = tally.get(s, 0) + 1
            return
        for v in range(m):
            x[i] = v
            if all(q[x[a]][x[b]] == x[c] for a, b, c in by_max.get(i, ())):
                rec(i + 1)

    rec(0)
    return dict(sorted(tally.items()))


# --- the two-sky family --------------------------------------------------
#
# Two skies run once around the annulus at levels 0 and 1; the unknotted
# axis threads the band once. The fixed part is the axis passage plus one
# curl on the lower sky (5 crossings). The repeating section is a sequence
# of hooks: one sky doubles back on itself and the other passes through the
# fold, over one side and under the other (2 crossings each).

def hook_lower_through_upper(mirror=False):
    # sky 2 folds; sky 1 passes over its forward side and under its return
    a, b = ("up", "down") if not mirror else ("down", "up")
    return [("cup", 2), ("x", 0, a), ("x", 1, b), ("cap", 0)]


def hook_upper_through_lower(mirror=False):
    # sky 1 folds; sky 2 passes over its forward side and under its return
    a, b = ("down", "up") if not mirror else ("up", "down")
    return [("cup", 0), ("x", 2, a), ("x", 1, b), ("cap", 2)]


FIXED = [("axis",), ("cup", 1), ("x", 0, "up"), ("cap", 0)]


def section():
    unit = (hook_lower_through_upper() + hook_upper_through_lower() +
            hook_lower_through_upper(True) + hook_upper_through_lower(True))
    return unit * 5


def family_member(k):
    return FIXED + section() * k


def relations_in_slice_order(events, levels):
    """Relations ordered left to right, arcs renumbered: axis arcs first,
    then by first appearance in the crossing list."""
    d = Diagram(events, levels)
    arcs, rel, comp, signs, order = d.to_relations()
    marks = [(label, lv, d.pin_arc[n]) for label, lv, n in d.marks]
    ordered = sorted(range(len(order)), key=lambda i: order[i])
    rel = [rel[i] for i in ordered]
    signs = [signs[i] for i in ordered]
    axis_comp = comp[rel[0][1]]  # first crossing: the axis passes over sky 1
    ranked = [a for a in range(arcs) if comp[a] == axis_comp]
    for r in rel:
        for a in (r[0], r[1], r[2]):
            if a not in ranked:
                ranked.append(a)
    for a in range(arcs):
        if a not in ranked:
            ranked.append(a)
    new = {a: i for i, a in enumerate(ranked)}
    rel = [(new[a], new[b], new[c]) for a, b, c in rel]
    comp_new = [0] * arcs
    for a in range(arcs):
        comp_new[new[a]] = comp[a]
    marks = [(label, lv, new[a]) for label, lv, a in marks]
    return arcs, rel, comp_new, signs, marks


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("k", type=int, help="number of repeated sections")
    ap.add_argument("--name", default=None)
    ap.add_argument("--boundary", action="store_true", help="print the arcs at the ends of the first section")
    ap.add_argument("--check", action="store_true", help="print coloring tallies over Conj(D3..D7)")
    args = ap.parse_args()
    events = family_member(args.k)
    if args.boundary:
        events = FIXED + [("mark", "entry")] + section() + [("mark", "exit")] + section() * (args.k - 1)
    arcs, rel, comp, signs, marks = relations_in_slice_order(events, 2)
    if args.boundary:
        for label, lv, a in marks:
            print("%s level %d arc %d" % (label, lv, a + 1), file=sys.stderr)
    name = args.name or "allen_swenberg_%d" % args.k
    if args.check:
        print("arcs", arcs, "crossings", len(rel), "components", len(set(comp)), file=sys.stderr)
        for n in range(3, 8):
            print("D%d" % n, count_colorings(arcs, rel, dihedral_conj(n)), file=sys.stderr)
    sys.stdout.write(to_lnk(name, arcs, rel))


if __name__ == "__main__":
    main()
