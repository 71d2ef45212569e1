import random
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def random_text(rng: random.Random, n: int, sigma: int, base: int = 97) -> bytes:
    if sigma >= 256:
        return rng.randbytes(n)
    return bytes(base + rng.randrange(sigma) for _ in range(n))


def text_files() -> list[Path]:
    """Real text shipped with the package: its own sources and README."""
    files = sorted((ROOT / "src" / "mlst").glob("*.py"))
    readme = ROOT / "README.md"
    if readme.exists() and readme.stat().st_size:
        files.append(readme)
    return files


def corpus(seed: int = 7, count: int = 40, max_len: int = 2048) -> list[tuple[str, bytes]]:
    rng = random.Random(seed)
    items = [("empty", b""), ("one", b"x"), ("abc", b"abc"), ("ababaa", b"ababaa")]
    for n in (2, 3, 17, 100, 1000, 4096):
        items.append((f"run{n}", b"a" * n))
    items.append(("ab-run", b"ab" * 700))
    items.append(("blocks", b"".join(b"a" * 40 + bytes([b]) for b in range(98, 120))))
    for k in range(count):
        sigma = (2, 4, 16, 26, 256)[k % 5]
        items.append((f"rand{k}-s{sigma}", random_text(rng, rng.randint(0, max_len), sigma)))
    for path in text_files():
        items.append((path.name, path.read_bytes()))
    return items
