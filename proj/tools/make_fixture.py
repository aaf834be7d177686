#!/usr/bin/env python3
"""Regenerate tests/data/papers_50.tsv.

Three research groups. Group A is organised around a single prolific author
(the degree hub). A low-degree author links one member of each group and
carries every shortest path between them.
"""
import random
import sys

COLUMNS = ["paper_id", "author_id", "author_name", "affiliation_id",
           "affiliation_name", "year", "field_id"]

INSTITUTES = {
    "A": ("I100", "North Institute of Technology"),
    "B": ("I200", "Lakeside University"),
    "C": ("I300", "Central Research Lab"),
    "X": ("I400", "Harbour College"),
}


def author(group, i):
    return (f"{group}{i:02d}", f"Author {group}{i:02d}")


def main(path):
    rng = random.Random(2021)
    hub = ("H00", "Hub Author")
    bridge = ("X00", "Bridge Author")
    groups = {"A": [author("A", i) for i in range(1, 13)],
              "B": [author("B", i) for i in range(1, 13)],
              "C": [author("C", i) for i in range(1, 11)]}
    papers = []
    guests = [author("G", i) for i in range(1, 7)]
    for n in range(18):
        members = [hub] + rng.sample(groups["A"], rng.randint(3, 5))
        if n % 3 == 0:
            members.append(guests[n // 3])
        papers.append(("A", members))
    for _ in range(14):
        papers.append(("B", rng.sample(groups["B"], rng.randint(3, 5))))
    for _ in range(12):
        papers.append(("C", rng.sample(groups["C"], rng.randint(2, 4))))
    for g in ("A", "B", "C"):
        papers.append(("X", [bridge, groups[g][0]]))
    papers.append(("A", [hub]))
    papers.append(("B", [groups["B"][3], groups["B"][4], groups["B"][3]]))
    papers.append(("C", rng.sample(groups["C"], 3)))
    assert len(papers) == 50

    rows = []
    for n, (g, authors) in enumerate(papers, start=1):
        pid = f"P{n:03d}"
        year = 2008 + rng.randint(0, 12)
        field = "F1" if g in ("A", "X") else "F2"
        for aid, name in authors:
            home = "X" if aid.startswith("X") else ("A" if aid[0] in "HG" else aid[0])
            inst = INSTITUTES[home]
            rows.append([pid, aid, name, inst[0], inst[1], str(year), field])
    rows.append(["P999", "", "Missing Id", "", "", "2015", "F1"])
    rows.append(["P998", "B01", "Author B01", "I200", "Lakeside University", "20x5", "F2"])

    with open(path, "w", newline="\n") as f:
        f.write("\t".join(COLUMNS) + "\n")
        for r in rows:
            f.write("\t".join(r) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/papers_50.tsv")
