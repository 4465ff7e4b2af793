"""How often does the Ramsey step itself fire, versus the direct-search
fallback, as the web grows?  Uses trivial webs in dense random hosts and
planted proper subdivisions."""

import argparse
from collections import Counter
from dataclasses import dataclass

from webextract.extraction import lemma_clean_interior, lemma_pinned
from webextract.web_model import plant_subdivision


@dataclass
class ProfileConfig:
    sizes: tuple = (4, 6, 8, 10, 12)
    seeds: int = 20
    noise: float = 0.2


def run(cfg: ProfileConfig):
    for k in cfg.sizes:
        routes = Counter()
        for seed in range(cfg.seeds):
            g, web = plant_subdivision(k, (1, 2), cfg.noise, seed)
            for cert in (lemma_pinned(g, web, 1, 1, 3), lemma_clean_interior(g, web, 1, 3)):
                routes[f"{cert.kind}/{cert.route}"] += 1
        print(k, dict(sorted(routes.items())))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--noise", type=float, default=0.2)
    a = ap.parse_args()
    run(ProfileConfig(seeds=a.seeds, noise=a.noise))
