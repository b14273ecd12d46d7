# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled parity game kernel.

Mirrors _zielonka_py.solve_game operation for operation, so both backends
return identical (winner, strat) pairs; only the inner loops are typed.
"""

from cpython cimport array
import array as _array

_INT = _array.array("i", [])


cdef class _Solver:
    cdef int n, m, maxp, n_alive, epoch
    cdef int[:] owner, pri, sstart, sto, pred_start, pred_src
    cdef int[:] out_alive, strat, mark, cnt, cnt_stamp, alive_cnt
    cdef unsigned char[:] alive, winner
    cdef list verts_by_pri
    cdef array.array strat_a

    def __init__(self, owner, priority, succ_start, succ_to):
        cdef int i, v, ei, t, p
        self.n = len(owner)
        self.m = len(succ_to)
        cdef array.array owner_a = _array.array("i", owner)
        cdef array.array pri_a = _array.array("i", priority)
        cdef array.array ss_a = _array.array("i", succ_start)
        cdef array.array st_a = _array.array("i", succ_to)
        self.owner = owner_a
        self.pri = pri_a
        self.sstart = ss_a
        self.sto = st_a

        cdef array.array ps = array.clone(_INT, self.n + 1, True)
        cdef int[:] psv = ps
        for i in range(self.m):
            psv[st_a.data.as_ints[i] + 1] += 1
        for i in range(self.n):
            psv[i + 1] += psv[i]
        cdef array.array psrc = array.clone(_INT, self.m if self.m else 1, True)
        cdef int[:] psrcv = psrc
        cdef array.array cur = array.clone(_INT, self.n if self.n else 1, True)
        cdef int[:] curv = cur
        for i in range(self.n):
            curv[i] = psv[i]
        for v in range(self.n):
            for ei in range(self.sstart[v], self.sstart[v + 1]):
                t = self.sto[ei]
                psrcv[curv[t]] = v
                curv[t] += 1
        self.pred_start = ps
        self.pred_src = psrc

        self.maxp = 0
        for i in range(self.n):
            if self.pri[i] > self.maxp:
                self.maxp = self.pri[i]
        self.verts_by_pri = [[] for _ in range(self.maxp + 1)]
        for v in range(self.n):
            (<list> self.verts_by_pri[self.pri[v]]).append(v)
        cdef array.array ac = array.clone(_INT, self.maxp + 1, True)
        cdef int[:] acv = ac
        for p in range(self.maxp + 1):
            acv[p] = len(<list> self.verts_by_pri[p])
        self.alive_cnt = ac

        self.alive = bytearray(b"\x01" * self.n)
        cdef array.array oa = array.clone(_INT, self.n if self.n else 1, True)
        cdef int[:] oav = oa
        for v in range(self.n):
            oav[v] = self.sstart[v + 1] - self.sstart[v]
        self.out_alive = oa
        self.winner = bytearray(self.n if self.n else 1)
        cdef array.array sa = array.clone(_INT, self.n if self.n else 1, True)
        cdef int[:] sav = sa
        for v in range(self.n):
            sav[v] = -1
        self.strat_a = sa
        self.strat = sa
        cdef array.array mk = array.clone(_INT, self.n if self.n else 1, True)
        self.mark = mk
        cdef array.array cn = array.clone(_INT, self.n if self.n else 1, True)
        self.cnt = cn
        cdef array.array cs = array.clone(_INT, self.n if self.n else 1, True)
        self.cnt_stamp = cs
        self.epoch = 0
        self.n_alive = self.n

    cdef list attract(self, int sigma, list seeds):
        cdef int ep, head, u, pi, p
        self.epoch += 1
        ep = self.epoch
        cdef list q = list(seeds)
        for u in q:
            self.mark[u] = ep
        head = 0
        while head < len(q):
            u = <int> q[head]
            head += 1
            for pi in range(self.pred_start[u], self.pred_start[u + 1]):
                p = self.pred_src[pi]
                if not self.alive[p] or self.mark[p] == ep:
                    continue
                if self.owner[p] == sigma:
                    self.mark[p] = ep
                    self.strat[p] = u
                    q.append(p)
                else:
                    if self.cnt_stamp[p] != ep:
                        self.cnt[p] = self.out_alive[p]
                        self.cnt_stamp[p] = ep
                    self.cnt[p] -= 1
                    if self.cnt[p] == 0:
                        self.mark[p] = ep
                        q.append(p)
        return q

    cdef void remove(self, list group):
        cdef int v, pi
        for v in group:
            self.alive[v] = 0
            self.alive_cnt[self.pri[v]] -= 1
            for pi in range(self.pred_start[v], self.pred_start[v + 1]):
                self.out_alive[self.pred_src[pi]] -= 1
        self.n_alive -= len(group)

    cdef void restore(self, list group):
        cdef int v, pi
        for v in group:
            self.alive[v] = 1
            self.alive_cnt[self.pri[v]] += 1
            for pi in range(self.pred_start[v], self.pred_start[v + 1]):
                self.out_alive[self.pred_src[pi]] += 1
        self.n_alive += len(group)

    cdef int max_alive_priority(self):
        cdef int p
        for p in range(self.maxp, -1, -1):
            if self.alive_cnt[p]:
                return p
        return -1

    cdef void rec(self, list out):
        cdef int p, sigma, opp, v, ei
        cdef list removed_groups = []
        cdef list top, attr, sub, opp_won, lost
        while True:
            p = self.max_alive_priority()
            if p < 0:
                break
            sigma = p & 1
            opp = sigma ^ 1
            top = [v for v in <list> self.verts_by_pri[p] if self.alive[v]]
            attr = self.attract(sigma, top)
            self.remove(attr)
            sub = []
            if self.n_alive:
                self.rec(sub)
            self.restore(attr)
            opp_won = [v for v in sub if self.winner[v] == opp]
            if not opp_won:
                for v in attr:
                    self.winner[v] = sigma
                for v in top:
                    if self.owner[v] == sigma:
                        for ei in range(self.sstart[v], self.sstart[v + 1]):
                            if self.alive[self.sto[ei]]:
                                self.strat[v] = self.sto[ei]
                                break
                out.extend(attr)
                out.extend(sub)
                break
            lost = self.attract(opp, opp_won)
            for v in lost:
                self.winner[v] = opp
            out.extend(lost)
            self.remove(lost)
            removed_groups.append(lost)
        for g in reversed(removed_groups):
            self.restore(<list> g)

    def run(self):
        cdef list decided = []
        if self.n:
            self.rec(decided)
        return [self.winner[v] for v in range(self.n)], list(self.strat_a[: self.n])


def solve_game(owner, priority, succ_start, succ_to):
    return _Solver(owner, priority, succ_start, succ_to).run()
