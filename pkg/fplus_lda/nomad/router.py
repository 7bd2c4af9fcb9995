from fplus_lda import constant
from fplus_lda.errors import ConfigError


class Router:
    """Picks where a worker sends a token next.

    ``ring`` sends worker l to l+1 mod p; ``random`` picks uniformly among the
    other workers using the router's own generator. With a single worker every
    token goes back to worker 0.
    """

    def __init__(self, policy: str, num_workers: int, rng=None):
        if policy not in constant.SUPPORTED_ROUTINGS:
            raise ConfigError(
                f"Invalid routing {policy}, should be one of {constant.SUPPORTED_ROUTINGS}",
            )
        if policy == constant.ROUTING_UNIFORM and rng is None:
            raise ConfigError("random routing needs a generator")
        self.policy = policy
        self.num_workers = num_workers
        self.rng = rng

    def next(self, sender: int) -> int:
        p = self.num_workers
        if p == 1:
            return 0
        if self.policy == constant.ROUTING_RING:
            return (sender + 1) % p
        dest = int(self.rng.integers(0, p - 1))
        return dest + 1 if dest >= sender else dest
