"""Converts the bundled UCI datasets into the CSV layout hqcs expects.

Sources are the raw files shipped inside two PyPI wheels:
  keel-ds                (iris.dat, wine.dat, haberman.dat)
  imbalanced-databases   (hepatitis.data.txt)

Usage:
  pip download keel-ds imbalanced-databases --no-deps -d /tmp/wheels
  python3 data/prepare_datasets.py /tmp/wheels data/
"""

import csv
import glob
import os
import sys
import zipfile


def _read_member(wheel_glob, member):
    path = glob.glob(wheel_glob)[0]
    with zipfile.ZipFile(path) as zf:
        return zf.read(member).decode("utf-8")


def _rows(text):
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("@"):
            yield [cell.strip() for cell in line.split(",")]


def _write(path, header, rows):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def main(wheel_dir, out_dir):
    keel = os.path.join(wheel_dir, "keel_ds-*.whl")
    idb = os.path.join(wheel_dir, "imbalanced_databases-*.whl")

    iris = _read_member(keel, "keel_ds/data/balanced/raw/iris.dat")
    _write(os.path.join(out_dir, "iris.csv"),
           ["sepal_length", "sepal_width", "petal_length", "petal_width",
            "species"],
           [[*r[:4], r[4].replace("Iris-", "")] for r in _rows(iris)])

    wine = _read_member(keel, "keel_ds/data/balanced/raw/wine.dat")
    _write(os.path.join(out_dir, "wine.csv"),
           ["alcohol", "malic_acid", "ash", "alcalinity", "magnesium",
            "total_phenols", "flavanoids", "nonflavanoid_phenols",
            "proanthocyanins", "color_intensity", "hue", "od280_od315",
            "proline", "cultivar"],
           [[*(c if not c.startswith(".") else "0" + c for c in r[:13]),
             r[13]] for r in _rows(wine)])

    haberman = _read_member(keel, "keel_ds/data/imbalanced/raw/haberman.dat")
    _write(os.path.join(out_dir, "haberman.csv"),
           ["age", "operation_year", "positive_nodes", "survival"],
           [[r[0], r[1], r[2], "died" if r[3] == "positive" else "survived"]
            for r in _rows(haberman)])

    hepatitis = _read_member(
        idb, "imbalanced_databases/data/hepatitis/hepatitis.data.txt")
    _write(os.path.join(out_dir, "hepatitis.csv"),
           ["age", "sex", "steroid", "antivirals", "fatigue", "malaise",
            "anorexia", "liver_big", "liver_firm", "spleen_palpable",
            "spiders", "ascites", "varices", "bilirubin", "alk_phosphate",
            "sgot", "albumin", "protime", "histology", "outcome"],
           [[*r[1:], "die" if r[0] == "1" else "live"]
            for r in _rows(hepatitis)])


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
