#!/usr/bin/env python3
"""Exports the bundled public networks as edge lists.

The networks ship inside PyPI packages. The archives are fetched with pip
and read in place, without installing them.

  <output>/corpus/   15 sparse networks with 10^2 to 10^4 vertices
  <output>/large/    WordNet 3.0 synset graph (~1.2 * 10^5 vertices)
"""

import argparse
import gzip
import io
import json
import re
import subprocess
import sys
import tarfile
import tempfile
import zipfile
from pathlib import Path

import networkx as nx
import scipy.io

PACKAGES = {
    "pgmpy": "pgmpy==1.1.2",
    "graspologic": "graspologic==3.4.4",
    "pygsp": "pygsp==0.6.1",
    "pandapower": "pandapower==3.5.6",
    "wn": "wn==0.0.23",
}

BIF_NETWORKS = ["pathfinder", "andes", "diabetes"]
JSON_NETWORKS = ["arth150"]
POWER_GRIDS = ["case118", "case145", "case300", "case1354pegase", "case2869pegase", "case9241pegase", "GBnetwork"]
WORDNET_FILES = {"noun": "n", "verb": "v", "adj": "a", "adv": "r"}


class Archive:
    def __init__(self, path):
        self.path = path
        if path.suffix == ".whl":
            self.zip = zipfile.ZipFile(path)
            self.tar = None
        else:
            self.zip = None
            self.tar = tarfile.open(path)
            self.root = self.tar.getnames()[0].split("/")[0]

    def read(self, member):
        if self.zip:
            return self.zip.read(member)
        return self.tar.extractfile(f"{self.root}/{member}").read()


def fetch(dest):
    archives = {}
    for key, spec in PACKAGES.items():
        subprocess.run([sys.executable, "-m", "pip", "download", "--no-deps", "-q", "-d", str(dest), spec],
                       check=True)
        matches = [p for p in Path(dest).iterdir() if p.name.lower().startswith(f"{key}-")]
        if not matches:
            sys.exit(f"missing archive for {key}")
        archives[key] = Archive(matches[0])
    return archives


def bif_skeleton(text):
    g = nx.Graph()
    g.add_nodes_from(re.findall(r"^variable\s+(\S+)", text, re.M))
    for child, parents in re.findall(r"probability\s*\(\s*([^\s|)]+)\s*(?:\|\s*([^)]*))?\)", text):
        for parent in (parents or "").split(","):
            if parent.strip():
                g.add_edge(child, parent.strip())
    return g


def json_skeleton(data):
    g = nx.Graph()
    g.add_nodes_from(data["nodes"])
    g.add_edges_from((a, b) for a, b in data["arcs"])
    return g


def adjacency_matrix_text(text):
    rows = [[float(x) for x in line.split()] for line in text.splitlines() if line.strip()]
    g = nx.Graph()
    g.add_nodes_from(range(len(rows)))
    g.add_edges_from((i, j) for i, row in enumerate(rows) for j, w in enumerate(row) if w != 0)
    return g


def power_grid(raw):
    net = json.loads(raw)["_object"]

    def table(name):
        frame = json.loads(net[name]["_object"])
        return [dict(zip(frame["columns"], row)) for row in frame["data"]]

    g = nx.Graph()
    g.add_nodes_from(json.loads(net["bus"]["_object"])["index"])
    g.add_edges_from((r["from_bus"], r["to_bus"]) for r in table("line"))
    g.add_edges_from((r["hv_bus"], r["lv_bus"]) for r in table("trafo"))
    for r in table("trafo3w"):
        g.add_edges_from([(r["hv_bus"], r["mv_bus"]), (r["hv_bus"], r["lv_bus"]), (r["mv_bus"], r["lv_bus"])])
    return g


def wordnet(archive):
    g = nx.Graph()
    for filename, pos in WORDNET_FILES.items():
        text = archive.read(f"wn/data/wordnet-3.0/data.{filename}").decode("latin-1")
        for line in text.splitlines():
            if line.startswith("  "):
                continue
            fields = line.split("|")[0].split()
            synset = (fields[0], pos)
            g.add_node(synset)
            at = 4 + 2 * int(fields[3], 16)
            for _ in range(int(fields[at])):
                _, offset, target_pos, _ = fields[at + 1:at + 5]
                at += 4
                g.add_edge(synset, (offset, "a" if target_pos == "s" else target_pos))
    return g


def write(g, path, source):
    g = nx.convert_node_labels_to_integers(g)
    g.remove_edges_from(list(nx.selfloop_edges(g)))
    edges = sorted((min(u, w), max(u, w)) for u, w in g.edges())
    with open(path, "w") as out:
        out.write(f"# {source}\n# n={g.number_of_nodes()} m={len(edges)}\n")
        for u, w in edges:
            out.write(f"{u} {w}\n")
        for v in sorted(g.nodes()):
            if g.degree(v) == 0:
                out.write(f"{v} {v}\n")
    print(f"{path.name}: n={g.number_of_nodes()} m={len(edges)}")


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("output", type=Path, help="data directory")
    args = parser.parse_args()
    corpus = args.output / "corpus"
    large = args.output / "large"
    corpus.mkdir(parents=True, exist_ok=True)
    large.mkdir(parents=True, exist_ok=True)

    with tempfile.TemporaryDirectory() as tmp:
        pkg = fetch(tmp)

        for name in BIF_NETWORKS:
            text = gzip.decompress(pkg["pgmpy"].read(f"pgmpy/utils/example_models/{name}.bif.gz")).decode()
            write(bif_skeleton(text), corpus / f"bn_{name}.txt", f"bnlearn Bayesian network {name}, undirected skeleton")
        for name in JSON_NETWORKS:
            data = json.loads(pkg["pgmpy"].read(f"pgmpy/utils/example_models/{name}.json"))
            write(json_skeleton(data), corpus / f"bn_{name}.txt", f"bnlearn Gaussian network {name}, undirected skeleton")

        for side in ("left", "right"):
            text = pkg["graspologic"].read(f"graspologic/datasets/drosophila/{side}_adjacency.csv").decode()
            write(adjacency_matrix_text(text), corpus / f"drosophila_{side}.txt",
                  f"larval Drosophila mushroom body connectome ({side}), symmetrised and unweighted")

        mat = scipy.io.loadmat(io.BytesIO(pkg["pygsp"].read("pygsp/data/pointclouds/minnesota.mat")))
        write(nx.from_scipy_sparse_array(mat["A"]), corpus / "minnesota_roads.txt", "Minnesota road network")
        mat = scipy.io.loadmat(io.BytesIO(pkg["pygsp"].read("pygsp/data/pointclouds/airfoil.mat")))
        g = nx.Graph()
        g.add_nodes_from(range(mat["x"].shape[0]))
        g.add_edges_from((int(i) - 1, int(j) - 1) for i, j in zip(mat["i_inds"].ravel(), mat["j_inds"].ravel()))
        write(g, corpus / "airfoil_mesh.txt", "airfoil finite-element mesh")

        for name in POWER_GRIDS:
            raw = pkg["pandapower"].read(f"pandapower/networks/power_system_test_case_jsons/{name}.json")
            write(power_grid(raw), corpus / f"grid_{name.lower()}.txt", f"power grid {name}, buses and branches")

        write(wordnet(pkg["wn"]), large / "wordnet.txt", "WordNet 3.0 synsets linked by any semantic or lexical pointer")


if __name__ == "__main__":
    main()
