#!/usr/bin/env python3
"""Rebuild data/uci/*.csv from locally available copies of the UCI files.

Iris comes from scikit-learn's bundled copy. Haberman, TAE, Glass and Ecoli
come from the `common-datasets` wheel (pip download common-datasets), Letter
from the `keel-ds` wheel (pip download keel-ds).
"""
import csv
import io
import pathlib
import sys
import zipfile

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "uci"


def write(name, header, rows):
    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / f"{name}.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    print(f"{name}: {len(rows)} rows")


def iris():
    import sklearn.datasets
    path = pathlib.Path(sklearn.datasets.__file__).parent / "data" / "iris.csv"
    lines = path.read_text().splitlines()
    names = lines[0].split(",")[2:]
    rows = []
    for line in lines[1:]:
        *vals, cls = line.split(",")
        rows.append(vals + ["Iris-" + names[int(cls)]])
    write("iris", ["sepal_length", "sepal_width", "petal_length", "petal_width", "class"], rows)


def keel(z, member, name):
    text = z.read(member).decode()
    header, rows, in_data = [], [], False
    for line in text.splitlines():
        s = line.strip()
        if not s:
            continue
        low = s.lower()
        if low.startswith("@attribute"):
            header.append(s.split()[1])
        elif low.startswith("@data"):
            in_data = True
        elif in_data:
            rows.append([c.strip() for c in s.split(",")])
    write(name, header, rows)


LETTER = ["x-box", "y-box", "width", "high", "onpix", "x-bar", "y-bar", "x2bar", "y2bar",
          "xybar", "x2ybr", "xy2br", "x-ege", "xegvy", "y-ege", "yegvx", "lettr"]


def letter(wheel):
    z = zipfile.ZipFile(wheel)
    text = z.read("keel_ds/data/balanced/raw/letter.dat").decode()
    rows = [[c.strip() for c in l.split(",")] for l in text.splitlines() if l.strip() and not l.startswith("@")]
    write("letter", LETTER, rows)


def main(wheel, keel_wheel=None):
    iris()
    z = zipfile.ZipFile(wheel)
    base = "common_datasets/data/classification/"
    keel(z, base + "haberman/haberman.dat", "haberman")
    keel(z, base + "tae/tae.dat", "tae")
    glass = [l.split(",") for l in z.read(base + "glass/glass.data.txt").decode().split()]
    write("glass", ["RI", "Na", "Mg", "Al", "Si", "K", "Ca", "Ba", "Fe", "type"],
          [r[1:] for r in glass])
    ecoli = [l.split() for l in z.read(base + "ecoli/ecoli.data.txt").decode().splitlines() if l.strip()]
    write("ecoli", ["mcg", "gvh", "lip", "chg", "aac", "alm1", "alm2", "site"],
          [r[1:] for r in ecoli])
    if keel_wheel:
        letter(keel_wheel)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "common_datasets-0.3.10-py3-none-any.whl",
         sys.argv[2] if len(sys.argv) > 2 else None)
