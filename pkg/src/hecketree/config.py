"""Run configuration shared by the command line tool and the scripts."""

from dataclasses import asdict, dataclass

from .levels import level_for
from .quotient import build_quotient

# Everything below these bounds has been exercised end to end; past them the
# code still runs but you are on your own.
TESTED_MAX_Q = 27
TESTED_MAX_DEG = 5
TESTED_MAX_DEPTH = 40


@dataclass(frozen=True)
class JobSpec:
    """One reproducible unit of work: a field, a level, and knobs."""

    q: int
    level: str
    modulus: tuple = ()
    ray_len: int = 3
    depth_cap: int = 40
    enum_cap: int = 200000
    seed: int = 0
    gen_degree: int = 2
    settle_degree: int = 0  # 0 = pick by field size
    eis_cap: int = 5
    jobs: int = 1

    def resolved_settle_degree(self):
        if self.settle_degree:
            return self.settle_degree
        return 3 if self.q <= 3 else 2

    def make_level(self):
        mod = self.modulus if self.modulus else None
        return level_for(self.q, self.level, modulus=mod)

    def build(self):
        return build_quotient(
            self.make_level(),
            ray_len=self.ray_len,
            depth_cap=self.depth_cap,
            enum_cap=self.enum_cap,
            seed=self.seed,
        )

    def echo(self):
        """Plain dict for provenance blocks; tuples become lists."""
        d = asdict(self)
        d["modulus"] = list(d["modulus"])
        return d

    def warnings(self):
        """Human-readable notes when the spec leaves tested territory."""
        lvl = self.make_level()
        notes = []
        if self.q > TESTED_MAX_Q:
            notes.append("field size %d above tested bound %d: unverified territory" % (self.q, TESTED_MAX_Q))
        if lvl.deg > TESTED_MAX_DEG:
            notes.append("level degree %d above tested bound %d: unverified territory" % (lvl.deg, TESTED_MAX_DEG))
        if self.depth_cap > TESTED_MAX_DEPTH:
            notes.append("depth cap %d above tested bound %d: unverified territory" % (self.depth_cap, TESTED_MAX_DEPTH))
        return notes
