"""Seeded synthetic master-data generator.

Produces three source feeds (text / JSONL / CSV) with ground truth: entity
ids for every record, stated relationships, and sampled degree-of-separation
pairs. Identical configs give byte-identical outputs.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from dataclasses import dataclass, field, asdict

from ..errors import ConfigError, InfeasibleRatioError
from ..graph import Edge, Node, PropertyGraph, bfs_distances, build_graph, connected_components
from ..rng import SplitMix64
from . import tables

UNSTRUCTURED = "unstructured"
SEMI_STRUCTURED = "semi_structured"
STRUCTURED = "structured"
SOURCES = (UNSTRUCTURED, SEMI_STRUCTURED, STRUCTURED)

DEFAULT_SCHEMA = [
    "given_name", "last_name", "gender", "dob", "street", "city", "state",
    "zip", "phone", "email", "national_id", "employer", "ethnicity",
    "created_ts", "source_system",
]

# attribute subsets emitted per source feed
SOURCE_FIELDS = {
    UNSTRUCTURED: ["given_name", "last_name", "dob", "city", "phone", "employer"],
    SEMI_STRUCTURED: [
        "given_name", "last_name", "gender", "dob", "city", "state", "zip",
        "phone", "email", "national_id", "employer",
    ],
    STRUCTURED: list(DEFAULT_SCHEMA),
}

ADDRESS_VARIANTS = [
    ("STREET", "ST"), ("AVENUE", "AVE"), ("DRIVE", "DR"), ("ROAD", "RD"),
    ("BOULEVARD", "BLVD"), ("LANE", "LN"),
]


@dataclass
class GeneratorConfig:
    seed: int = 42
    n_entities: int = 1000
    zipf_exponent: float = 2.0
    max_records_per_entity: int = 10
    typo_rate: float = 0.1
    edge_to_node_ratio: float = 5.0
    rewire_prob: float = 0.03
    relation_type_weights: dict[str, float] = field(
        default_factory=lambda: dict(tables.DEFAULT_RELATION_WEIGHTS)
    )
    attribute_schema: list[str] = field(default_factory=lambda: list(DEFAULT_SCHEMA))
    protected_attributes: dict[str, dict[str, float]] = field(
        default_factory=lambda: {
            "gender": {"F": 0.5, "M": 0.5},
            "ethnicity": {"E1": 0.35, "E2": 0.25, "E3": 0.2, "E4": 0.12, "E5": 0.08},
        }
    )
    target_avg_path_length: float = 6.0
    n_separation_samples: int = 100

    def validate(self) -> None:
        if self.n_entities < 1:
            raise ConfigError("n_entities must be >= 1")
        if self.zipf_exponent <= 1:
            raise ConfigError("zipf_exponent must be > 1")
        if self.max_records_per_entity < 1:
            raise ConfigError("max_records_per_entity must be >= 1")
        if not (0.0 <= self.typo_rate <= 1.0):
            raise ConfigError("typo_rate must be in [0, 1]")
        if self.edge_to_node_ratio <= 0:
            raise ConfigError("edge_to_node_ratio must be > 0")
        if not self.attribute_schema:
            raise ConfigError("attribute_schema must be non-empty")
        for attr, targets in self.protected_attributes.items():
            if abs(sum(targets.values()) - 1.0) > 1e-9:
                raise ConfigError(f"target proportions for {attr} must sum to 1")

    @classmethod
    def from_file(cls, path: str) -> "GeneratorConfig":
        with open(path, encoding="utf-8") as f:
            if path.endswith(".toml"):
                import tomllib

                data = tomllib.loads(f.read())
            else:
                data = json.load(f)
        cfg = cls(**data)
        cfg.validate()
        return cfg


@dataclass
class SourceRecord:
    record_id: str
    source: str
    attributes: dict[str, str]


@dataclass
class GroundTruth:
    record_to_entity: dict[str, int]
    relationships: list[tuple[int, int, str]]
    separations: list[tuple[int, int, int]]  # (entity, entity, hops); -1 = disconnected


def sample_duplicate_counts(
    n_entities: int, zipf_exponent: float, max_k: int, seed: int
) -> list[int]:
    """Per-entity record counts from a truncated Zipf pmf P(k) ~ k^-s, k in [1, max_k]."""
    if n_entities < 1 or max_k < 1:
        raise ConfigError("n_entities and max_k must be >= 1")
    rng = SplitMix64(seed).fork("dup-counts")
    weights = [k ** (-zipf_exponent) for k in range(1, max_k + 1)]
    total = sum(weights)
    cdf = []
    acc = 0.0
    for w in weights:
        acc += w / total
        cdf.append(acc)
    counts = []
    for _ in range(n_entities):
        r = rng.random()
        k = 1
        while k < max_k and r > cdf[k - 1]:
            k += 1
        counts.append(k)
    return counts


def zipf_pmf(zipf_exponent: float, max_k: int) -> list[float]:
    weights = [k ** (-zipf_exponent) for k in range(1, max_k + 1)]
    total = sum(weights)
    return [w / total for w in weights]


def _weighted_name(rng: SplitMix64, table) -> str:
    idx = rng.weighted_choice(table, [w for _, w in table])
    return table[idx][0]


def _proportional(rng: SplitMix64, targets: dict[str, float]) -> str:
    cats = sorted(targets)
    idx = rng.weighted_choice(cats, [targets[c] for c in cats])
    return cats[idx]


def generate_entities(config: GeneratorConfig) -> list[dict[str, str]]:
    """Canonical person records; one dict of schema attributes per entity."""
    config.validate()
    rng = SplitMix64(config.seed).fork("entities")
    gender_targets = config.protected_attributes.get("gender", {"F": 0.5, "M": 0.5})
    eth_targets = config.protected_attributes.get(
        "ethnicity", {e: 1 / len(tables.ETHNICITIES) for e in tables.ETHNICITIES}
    )
    entities = []
    for i in range(config.n_entities):
        gender = _proportional(rng, gender_targets)
        given_table = tables.GIVEN_NAMES_A if gender == "F" else tables.GIVEN_NAMES_B
        given = _weighted_name(rng, given_table)
        last = _weighted_name(rng, tables.SURNAMES)
        city_idx = rng.weighted_choice(tables.CITIES, [w for _, _, w in tables.CITIES])
        city, state, _ = tables.CITIES[city_idx]
        year = rng.randint(1940, 2005)
        month = rng.randint(1, 12)
        day = rng.randint(1, 28)
        phone = "".join(str(rng.randint(0, 9)) for _ in range(10))
        nid = "".join(str(rng.randint(0, 9)) for _ in range(9))
        attrs = {
            "given_name": given,
            "last_name": last,
            "gender": gender,
            "dob": f"{year:04d}-{month:02d}-{day:02d}",
            "street": f"{rng.randint(1, 9999)} {rng.choice(tables.STREET_NAMES)}",
            "city": city,
            "state": state,
            "zip": f"{rng.randint(10000, 99999)}",
            "phone": phone,
            "email": f"{given.lower()}.{last.lower()}{rng.randint(1, 999)}@example.com",
            "national_id": f"{nid[0:3]}-{nid[3:5]}-{nid[5:9]}",
            "employer": _weighted_name(rng, tables.EMPLOYERS),
            "ethnicity": _proportional(rng, eth_targets),
            "created_ts": f"2020-01-01T{rng.randint(0, 23):02d}:{rng.randint(0, 59):02d}:00Z",
            "source_system": f"SYS{rng.randint(1, 5)}",
        }
        entities.append({k: attrs[k] for k in config.attribute_schema if k in attrs})
    return entities


_EDIT_ALPHABET = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def _char_edit(value: str, rng: SplitMix64) -> str:
    """One random insert/delete/substitute; guaranteed to change the string."""
    if not value:
        return rng.choice(_EDIT_ALPHABET)
    alphabet = "0123456789" if value.replace("-", "").isdigit() else _EDIT_ALPHABET
    kind = rng.randint(0, 2) if len(value) > 1 else rng.randint(0, 1)
    pos = rng.randint(0, len(value) - 1)
    if kind == 0:  # substitute
        old = value[pos]
        new = rng.choice(alphabet)
        while new == old:
            new = rng.choice(alphabet)
        return value[:pos] + new + value[pos + 1 :]
    if kind == 1:  # insert
        return value[:pos] + rng.choice(alphabet) + value[pos:]
    return value[:pos] + value[pos + 1 :]  # delete


def _perturb(attr: str, value: str, rng: SplitMix64) -> str | None:
    """Apply one perturbation; None means the field is dropped."""
    kind = rng.randint(0, 3)
    if kind == 0:
        return _char_edit(value, rng)
    if kind == 1:  # nickname substitution, given names only
        if attr == "given_name" and value in tables.NICKNAMES:
            return rng.choice(tables.NICKNAMES[value])
        return _char_edit(value, rng)
    if kind == 2:  # address variant
        if attr in ("street", "city"):
            for long_form, short_form in ADDRESS_VARIANTS:
                if value.endswith(" " + short_form):
                    return value[: -len(short_form)] + long_form
                if value.endswith(" " + long_form):
                    return value[: -len(long_form)] + short_form
        return _char_edit(value, rng)
    return None  # field drop


def derive_duplicates(
    entity: dict[str, str], k: int, typo_rate: float, seed: int
) -> list[dict[str, str]]:
    """k perturbed copies of the canonical record (exact copies at typo_rate 0)."""
    if k < 1:
        raise ConfigError("k must be >= 1")
    rng = SplitMix64(seed).fork("duplicates")
    out = []
    for _ in range(k):
        dup: dict[str, str] = {}
        perturbed_all = True
        for attr, value in entity.items():
            if rng.random() < typo_rate:
                new = _perturb(attr, value, rng)
                if new is not None:
                    dup[attr] = new
            else:
                dup[attr] = value
                perturbed_all = False
        if perturbed_all and entity:
            first = next(iter(entity))
            dup[first] = entity[first]
        out.append(dup)
    return out


def generate_relationships(
    n_entities: int, config: GeneratorConfig
) -> list[tuple[int, int, str]]:
    """Typed undirected edges between entities.

    Wiring is a ring lattice (long paths) with a rewired fraction acting as
    shortcuts, tuned so the giant component's average path length lands near
    the configured target; leftover edges beyond the lattice are random.
    """
    if n_entities < 2:
        raise ConfigError("need at least 2 entities for relationships")
    m = math.ceil(config.edge_to_node_ratio * n_entities)
    if m > n_entities * (n_entities - 1) // 2:
        raise InfeasibleRatioError(
            f"cannot place {m} simple edges among {n_entities} nodes"
        )
    rng = SplitMix64(config.seed).fork("relationships")
    existing: set[tuple[int, int]] = set()

    def norm(u: int, v: int) -> tuple[int, int]:
        return (u, v) if u < v else (v, u)

    pairs: list[tuple[int, int]] = []
    k = m // n_entities
    k = min(k, (n_entities - 1) // 2)
    for offset in range(1, k + 1):
        for u in range(n_entities):
            v = (u + offset) % n_entities
            p = norm(u, v)
            if p not in existing:
                existing.add(p)
                pairs.append(p)
    # rewire lattice edges into shortcuts
    for i, (u, v) in enumerate(pairs):
        if rng.random() < config.rewire_prob:
            for _ in range(20):
                w = rng.randint(0, n_entities - 1)
                if w != u and norm(u, w) not in existing:
                    existing.discard((u, v) if u < v else (v, u))
                    existing.add(norm(u, w))
                    pairs[i] = norm(u, w)
                    break
    # top up to the exact edge count with random pairs
    while len(pairs) < m:
        u = rng.randint(0, n_entities - 1)
        v = rng.randint(0, n_entities - 1)
        if u == v or norm(u, v) in existing:
            continue
        existing.add(norm(u, v))
        pairs.append(norm(u, v))

    rel_names = sorted(config.relation_type_weights)
    rel_weights = [config.relation_type_weights[r] for r in rel_names]
    return [
        (u, v, rel_names[rng.weighted_choice(rel_names, rel_weights)]) for u, v in pairs
    ]


def render_unstructured(record_id: str, attrs: dict[str, str]) -> str:
    """Fixed sentence template; invertible by parse_unstructured_line."""
    name = " ".join(x for x in (attrs.get("given_name"), attrs.get("last_name")) if x)
    name = name or "UNKNOWN"
    sentences = []
    if attrs.get("dob"):
        sentences.append(f"{name} was born on {attrs['dob']}.")
    if attrs.get("city"):
        sentences.append(f"{name} lives in {attrs['city']}.")
    if attrs.get("employer"):
        sentences.append(f"{name} works at {attrs['employer']}.")
    if attrs.get("phone"):
        sentences.append(f"{name} can be reached at {attrs['phone']}.")
    if not sentences:
        sentences.append(f"{name} is on file.")
    return record_id + "\t" + " ".join(sentences)


def parse_unstructured_line(line: str) -> SourceRecord:
    record_id, _, text = line.rstrip("\n").partition("\t")
    attrs: dict[str, str] = {}
    name = None
    for sentence in text.split(". "):
        sentence = sentence.rstrip(".")
        for marker, field_name in (
            (" was born on ", "dob"),
            (" lives in ", "city"),
            (" works at ", "employer"),
            (" can be reached at ", "phone"),
        ):
            if marker in sentence:
                name, value = sentence.split(marker, 1)
                attrs[field_name] = value
                break
    if name:
        parts = name.split(" ")
        if len(parts) >= 2:
            attrs["given_name"] = " ".join(parts[:-1])
            attrs["last_name"] = parts[-1]
        else:
            attrs["last_name"] = name
    return SourceRecord(record_id, UNSTRUCTURED, attrs)


def emit_sources(
    duplicates: list[tuple[str, int, dict[str, str]]],
    relationships: list[tuple[int, int, str]],
    separations: list[tuple[int, int, int]],
    out_dir: str,
) -> None:
    """Write the three source feeds plus ground_truth.jsonl.

    ``duplicates`` is a flat list of (record_id, entity_id, attributes) with
    records of one entity adjacent; round-robin routing starts at
    entity_id % 3 so single-record entities spread over all sources.
    """
    os.makedirs(out_dir, exist_ok=True)
    text_lines = []
    semi_lines = []
    csv_buf = io.StringIO()
    writer = csv.DictWriter(csv_buf, fieldnames=["record_id"] + DEFAULT_SCHEMA)
    writer.writeheader()
    gt_lines = []
    per_entity_counter: dict[int, int] = {}
    for record_id, entity_id, attrs in duplicates:
        slot = per_entity_counter.get(entity_id, 0)
        per_entity_counter[entity_id] = slot + 1
        source = SOURCES[(entity_id + slot) % 3]
        kept = {k: v for k, v in attrs.items() if k in SOURCE_FIELDS[source]}
        if source == UNSTRUCTURED:
            text_lines.append(render_unstructured(record_id, kept))
        elif source == SEMI_STRUCTURED:
            semi_lines.append(json.dumps({"record_id": record_id, **kept}, ensure_ascii=False))
        else:
            writer.writerow({"record_id": record_id, **kept})
        gt_lines.append(json.dumps({"type": "record", "record_id": record_id, "entity_id": entity_id}))
    for a, b, rel in relationships:
        gt_lines.append(json.dumps({"type": "relationship", "a": a, "b": b, "relation": rel}))
    for a, b, hops in separations:
        gt_lines.append(json.dumps({"type": "separation", "a": a, "b": b, "hops": hops}))

    with open(os.path.join(out_dir, "source_text.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(text_lines) + ("\n" if text_lines else ""))
    with open(os.path.join(out_dir, "source_semi.jsonl"), "w", encoding="utf-8") as f:
        f.write("\n".join(semi_lines) + ("\n" if semi_lines else ""))
    with open(os.path.join(out_dir, "source_tab.csv"), "w", encoding="utf-8", newline="") as f:
        f.write(csv_buf.getvalue())
    with open(os.path.join(out_dir, "ground_truth.jsonl"), "w", encoding="utf-8") as f:
        f.write("\n".join(gt_lines) + ("\n" if gt_lines else ""))


def load_sources(src_dir: str) -> list[SourceRecord]:
    """Read all three feeds back as SourceRecords (empty CSV cells dropped)."""
    records = []
    text_path = os.path.join(src_dir, "source_text.txt")
    if os.path.exists(text_path):
        with open(text_path, encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    records.append(parse_unstructured_line(line))
    semi_path = os.path.join(src_dir, "source_semi.jsonl")
    if os.path.exists(semi_path):
        with open(semi_path, encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    obj = json.loads(line)
                    rid = obj.pop("record_id")
                    records.append(SourceRecord(rid, SEMI_STRUCTURED, obj))
    csv_path = os.path.join(src_dir, "source_tab.csv")
    if os.path.exists(csv_path):
        with open(csv_path, encoding="utf-8", newline="") as f:
            for row in csv.DictReader(f):
                rid = row.pop("record_id")
                attrs = {k: v for k, v in row.items() if v}
                records.append(SourceRecord(rid, STRUCTURED, attrs))
    return records


def load_ground_truth(src_dir: str) -> GroundTruth:
    mapping: dict[str, int] = {}
    rels: list[tuple[int, int, str]] = []
    seps: list[tuple[int, int, int]] = []
    with open(os.path.join(src_dir, "ground_truth.jsonl"), encoding="utf-8") as f:
        for line in f:
            if not line.strip():
                continue
            obj = json.loads(line)
            if obj["type"] == "record":
                mapping[obj["record_id"]] = int(obj["entity_id"])
            elif obj["type"] == "relationship":
                rels.append((int(obj["a"]), int(obj["b"]), obj["relation"]))
            elif obj["type"] == "separation":
                seps.append((int(obj["a"]), int(obj["b"]), int(obj["hops"])))
    return GroundTruth(mapping, rels, seps)


def entity_graph(
    entities: list[dict[str, str]], relationships: list[tuple[int, int, str]]
) -> PropertyGraph:
    """Ground-truth entity graph (one node per entity)."""
    nodes = [Node(i, attributes=dict(e)) for i, e in enumerate(entities)]
    edges = [Edge(a, b, rel) for a, b, rel in relationships]
    return build_graph(nodes, edges)


def generate(config: GeneratorConfig, out_dir: str) -> PropertyGraph:
    """Run the full pipeline: entities, duplicates, relationships, emission.

    Returns the ground-truth entity graph (also written as nodes/edges.jsonl
    under out_dir/truth_graph).
    """
    config.validate()
    entities = generate_entities(config)
    counts = sample_duplicate_counts(
        config.n_entities, config.zipf_exponent, config.max_records_per_entity, config.seed
    )
    duplicates: list[tuple[str, int, dict[str, str]]] = []
    rid = 0
    for entity_id, (entity, k) in enumerate(zip(entities, counts)):
        for dup in derive_duplicates(entity, k, config.typo_rate, config.seed + entity_id * 7919):
            duplicates.append((f"R{rid:07d}", entity_id, dup))
            rid += 1
    relationships = (
        generate_relationships(config.n_entities, config) if config.n_entities >= 2 else []
    )
    graph = entity_graph(entities, relationships)

    sep_rng = SplitMix64(config.seed).fork("separations")
    separations = []
    if config.n_entities >= 2:
        for _ in range(config.n_separation_samples):
            a = sep_rng.randint(0, config.n_entities - 1)
            b = sep_rng.randint(0, config.n_entities - 1)
            if a == b:
                continue
            dist = bfs_distances(graph, a, 12)
            separations.append((a, b, dist.get(b, -1)))

    emit_sources(duplicates, relationships, separations, out_dir)
    from ..graph import save_graph

    save_graph(graph, os.path.join(out_dir, "truth_graph"))
    with open(os.path.join(out_dir, "gen_config.json"), "w", encoding="utf-8") as f:
        json.dump(asdict(config), f, indent=2, sort_keys=True)
    return graph


def average_path_length(g: PropertyGraph, n_sources: int = 100, seed: int = 0) -> float:
    """Mean hop distance over BFS trees from sampled sources in the giant component."""
    comps = connected_components(g)
    if not comps:
        return 0.0
    giant = sorted(comps[0])
    if len(giant) < 2:
        return 0.0
    rng = SplitMix64(seed).fork("apl")
    sources = giant if len(giant) <= n_sources else rng.sample(giant, n_sources)
    total, count = 0, 0
    for s in sources:
        for v, d in bfs_distances(g, s, g.n_nodes).items():
            if v != s:
                total += d
                count += 1
    return total / count if count else 0.0
