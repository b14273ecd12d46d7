"""Attractor-based recursive parity game solver, pure Python kernel.

Max-parity on vertex priorities: player 0 wins a play iff the highest
priority seen infinitely often is even.  Works on a CSR successor graph
where every vertex has at least one successor (the caller checks this).
Winner and positional strategies are computed for both players; strat[v]
is a successor vertex for vertices owned by their winner, -1 elsewhere.

Vertices are removed and restored in place instead of copying subgames,
and the second half of the classic recursion runs as a loop, so the
recursion depth is bounded by the number of distinct priorities.
"""


def solve_game(owner, priority, succ_start, succ_to):
    n = len(owner)
    m = len(succ_to)

    # predecessor CSR via counting sort, edge order preserved
    pred_start = [0] * (n + 1)
    for t in succ_to:
        pred_start[t + 1] += 1
    for i in range(n):
        pred_start[i + 1] += pred_start[i]
    pred_src = [0] * m
    cursor = pred_start[:n]
    for v in range(n):
        for ei in range(succ_start[v], succ_start[v + 1]):
            t = succ_to[ei]
            pred_src[cursor[t]] = v
            cursor[t] += 1

    maxp = 0
    for p in priority:
        if p > maxp:
            maxp = p
    verts_by_pri = [[] for _ in range(maxp + 1)]
    for v in range(n):
        verts_by_pri[priority[v]].append(v)
    alive_cnt = [len(lst) for lst in verts_by_pri]

    alive = bytearray(b"\x01" * n)
    out_alive = [succ_start[v + 1] - succ_start[v] for v in range(n)]
    winner = bytearray(n)
    strat = [-1] * n
    mark = [0] * n
    cnt = [0] * n
    cnt_stamp = [0] * n
    state = {"epoch": 0, "n_alive": n}

    def attract(sigma, seeds):
        state["epoch"] += 1
        ep = state["epoch"]
        q = list(seeds)
        for v in q:
            mark[v] = ep
        head = 0
        while head < len(q):
            u = q[head]
            head += 1
            for pi in range(pred_start[u], pred_start[u + 1]):
                p = pred_src[pi]
                if not alive[p] or mark[p] == ep:
                    continue
                if owner[p] == sigma:
                    mark[p] = ep
                    strat[p] = u
                    q.append(p)
                else:
                    if cnt_stamp[p] != ep:
                        cnt[p] = out_alive[p]
                        cnt_stamp[p] = ep
                    cnt[p] -= 1
                    if cnt[p] == 0:
                        mark[p] = ep
                        q.append(p)
        return q

    def remove(group):
        for v in group:
            alive[v] = 0
            alive_cnt[priority[v]] -= 1
            for pi in range(pred_start[v], pred_start[v + 1]):
                out_alive[pred_src[pi]] -= 1
        state["n_alive"] -= len(group)

    def restore(group):
        for v in group:
            alive[v] = 1
            alive_cnt[priority[v]] += 1
            for pi in range(pred_start[v], pred_start[v + 1]):
                out_alive[pred_src[pi]] += 1
        state["n_alive"] += len(group)

    def max_alive_priority():
        for p in range(maxp, -1, -1):
            if alive_cnt[p]:
                return p
        return -1

    def rec(out):
        removed_groups = []
        while True:
            p = max_alive_priority()
            if p < 0:
                break
            sigma = p & 1
            opp = sigma ^ 1
            top = [v for v in verts_by_pri[p] if alive[v]]
            attr = attract(sigma, top)
            remove(attr)
            sub = []
            if state["n_alive"]:
                rec(sub)
            restore(attr)
            opp_won = [v for v in sub if winner[v] == opp]
            if not opp_won:
                for v in attr:
                    winner[v] = sigma
                for v in top:
                    # seeds keep the play inside the current game
                    if owner[v] == sigma:
                        for ei in range(succ_start[v], succ_start[v + 1]):
                            if alive[succ_to[ei]]:
                                strat[v] = succ_to[ei]
                                break
                out.extend(attr)
                out.extend(sub)
                break
            lost = attract(opp, opp_won)
            for v in lost:
                winner[v] = opp
            out.extend(lost)
            remove(lost)
            removed_groups.append(lost)
        for g in reversed(removed_groups):
            restore(g)

    decided = []
    if n:
        rec(decided)
    return list(winner), strat
