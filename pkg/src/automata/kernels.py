"""Numba kernels for whole-state-space dynamics

Configurations are int64 words, cell i is bit i. A rule is an int64 array of 8
outputs indexed by the neighborhood pattern 4l+2c+r. Update modes are passed in
CSR form: `cells` holds the cells of every block back to back and
`offsets[b]:offsets[b+1]` delimits block b.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def cell_output(table, n, x, i):
    """Output of the local rule at cell i of x"""
    left = (x >> ((i + n - 1) % n)) & 1
    center = (x >> i) & 1
    right = (x >> ((i + 1) % n)) & 1
    return table[(left << 2) | (center << 1) | right]


@njit(cache=True)
def apply_block(table, n, x, cells, start, stop):
    """Update cells[start:stop] simultaneously against x"""
    y = x
    for k in range(start, stop):
        i = cells[k]
        bit = cell_output(table, n, x, i)
        y = (y & ~(np.int64(1) << i)) | (bit << i)
    return y


@njit(cache=True)
def step_config(table, n, x, cells, offsets):
    """One full period of substeps applied to x"""
    for b in range(offsets.shape[0] - 1):
        x = apply_block(table, n, x, cells, offsets[b], offsets[b + 1])
    return x


@njit(cache=True)
def step_table(table, n, cells, offsets):
    """Step map of a periodic mode over all 2^n configurations"""
    size = np.int64(1) << n
    out = np.empty(size, dtype=np.int64)
    for x in range(size):
        out[x] = step_config(table, n, np.int64(x), cells, offsets)
    return out


@njit(cache=True)
def sequential_step_table_into(table, n, order, out):
    """Fill out with the step map of a sequential mode"""
    size = out.shape[0]
    for x0 in range(size):
        x = np.int64(x0)
        for k in range(n):
            i = order[k]
            bit = cell_output(table, n, x, i)
            x = (x & ~(np.int64(1) << i)) | (bit << i)
        out[x0] = x


@njit(cache=True)
def sequential_step_tables(table, n, perms):
    """Step maps for a batch of sequential modes, one row per permutation"""
    size = np.int64(1) << n
    out = np.empty((perms.shape[0], size), dtype=np.int64)
    for p in range(perms.shape[0]):
        sequential_step_table_into(table, n, perms[p], out[p])
    return out


@njit(cache=True)
def convergence_depths(step_map):
    """Steps needed to reach a fixed point, or -1 when the orbit ends on a longer cycle

    Every configuration of the functional graph is labelled once; paths are
    written back in reverse so the whole pass is linear in 2^n.
    """
    size = step_map.shape[0]
    unknown = np.int64(-2)
    on_path = np.int64(-3)
    depth = np.full(size, unknown, dtype=np.int64)
    path = np.empty(size, dtype=np.int64)
    for s in range(size):
        if depth[s] != unknown:
            continue
        length = 0
        x = np.int64(s)
        while depth[x] == unknown:
            depth[x] = on_path
            path[length] = x
            length += 1
            x = step_map[x]
        if depth[x] == on_path:
            if step_map[x] == x:
                # x closed the path on itself: fixed point
                depth[x] = 0
                base = np.int64(0)
                length -= 1
            else:
                base = np.int64(-1)
        else:
            base = depth[x]
        for k in range(length - 1, -1, -1):
            if base < 0:
                depth[path[k]] = -1
            else:
                base += 1
                depth[path[k]] = base
    return depth


@njit(cache=True)
def all_converge(step_map, depth, path):
    """True iff every configuration reaches a fixed point; buffers are reused scratch space"""
    size = step_map.shape[0]
    unknown = np.int64(-2)
    on_path = np.int64(-3)
    for s in range(size):
        depth[s] = unknown
    for s in range(size):
        if depth[s] != unknown:
            continue
        length = 0
        x = np.int64(s)
        while depth[x] == unknown:
            depth[x] = on_path
            path[length] = x
            length += 1
            x = step_map[x]
        if depth[x] == on_path:
            if step_map[x] != x:
                return False
        for k in range(length):
            depth[path[k]] = 0
    return True


@njit(cache=True)
def universal_flags(table, n, perms):
    """Universality of every sequential mode in perms"""
    size = np.int64(1) << n
    step_map = np.empty(size, dtype=np.int64)
    depth = np.empty(size, dtype=np.int64)
    path = np.empty(size, dtype=np.int64)
    flags = np.zeros(perms.shape[0], dtype=np.bool_)
    for p in range(perms.shape[0]):
        sequential_step_table_into(table, n, perms[p], step_map)
        flags[p] = all_converge(step_map, depth, path)
    return flags


@njit(cache=True)
def converged_masks(table, n, perms):
    """Per permutation, a boolean row of the configurations that reach a fixed point"""
    size = np.int64(1) << n
    step_map = np.empty(size, dtype=np.int64)
    out = np.zeros((perms.shape[0], size), dtype=np.bool_)
    for p in range(perms.shape[0]):
        sequential_step_table_into(table, n, perms[p], step_map)
        depth = convergence_depths(step_map)
        for x in range(size):
            out[p, x] = depth[x] >= 0
    return out


@njit(cache=True)
def parallel_fixed_points(table, n):
    """All x with f(x) = x under simultaneous update"""
    size = np.int64(1) << n
    buffer = np.empty(1024, dtype=np.int64)
    count = 0
    for x0 in range(size):
        x = np.int64(x0)
        fixed = True
        for i in range(n):
            if cell_output(table, n, x, i) != ((x >> i) & 1):
                fixed = False
                break
        if fixed:
            if count == buffer.shape[0]:
                grown = np.empty(buffer.shape[0] * 2, dtype=np.int64)
                grown[:count] = buffer[:count]
                buffer = grown
            buffer[count] = x
            count += 1
    return buffer[:count].copy()


@njit(cache=True)
def preimage_counts(step_map):
    """Number of preimages of every configuration under a step map"""
    counts = np.zeros(step_map.shape[0], dtype=np.int64)
    for x in range(step_map.shape[0]):
        counts[step_map[x]] += 1
    return counts
