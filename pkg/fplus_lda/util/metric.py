import time


def current_ts():
    return time.perf_counter()


def cost_time(start_time):
    """Seconds elapsed since ``start_time`` (a value of :func:`current_ts`)."""
    return time.perf_counter() - start_time


def tokens_per_second(num_tokens, seconds):
    if seconds <= 0.0:
        return 0.0
    return num_tokens / seconds


def ns_per_op(total_ns, ops):
    if ops <= 0:
        return 0.0
    return total_ns / ops
