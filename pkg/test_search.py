"""
Tests for the search engine and its coordinations
"""

import json
import threading
import time
from collections import Counter

import numpy as np
import pytest

from flowbnb.config import SkeletonConfig
from flowbnb.core import (
    Coordination,
    FlowshopGenerator,
    Schedule,
    SearchDeadlockError,
    evaluate_makespan,
    generate_random_instance,
    neh_upper_bound,
    root_node,
)
from flowbnb.search import (
    BudgetCoordinator,
    IncumbentRegistry,
    SearchEngine,
    SearchMetrics,
    StackStealingCoordinator,
    TraceRecorder,
    Worker,
    budget_search,
    depthbounded_search,
    direct_search,
    offer_incumbent,
    search,
    sequential_dfs,
    stackstealing_search,
)
from flowbnb.search.base import Explorer
from flowbnb.search.workpool import Task, TaskCounter, WorkDeque

PARALLEL = [Coordination.DEPTH_BOUNDED, Coordination.BUDGET, Coordination.STACK_STEALING]
ALL = [Coordination.SEQUENTIAL] + PARALLEL


def _config(coordination, **overrides) -> SkeletonConfig:
    return SkeletonConfig.for_coordination(coordination, **overrides)


def _check_result(inst, result, optimum):
    assert result.proven_optimal
    assert result.makespan == optimum.makespan
    assert evaluate_makespan(inst, result.schedule.permutation) == result.makespan


def test_sequential_two_by_two(two_by_two):
    result = search(two_by_two, _config("seq"))
    assert result.makespan == 4
    assert result.proven_optimal
    assert result.schedule.permutation == (0, 1)
    assert result.metrics.wall_time > 0


def test_root_pruned_by_neh(one_by_one, two_by_two):
    """When NEH already meets the root bound the search stops at the root"""
    for inst, makespan in ((one_by_one, 5), (two_by_two, 4)):
        result = search(inst, _config("seq"))
        assert result.makespan == makespan
        assert result.proven_optimal
        assert result.metrics.nodes_visited == 1
        assert result.metrics.nodes_pruned == 1


def test_sequential_is_deterministic(small_oracle):
    inst, _ = small_oracle[0]
    first = search(inst, _config("seq")).metrics
    second = search(inst, _config("seq")).metrics
    assert first.counters() == second.counters()


def test_sequential_dfs_explores_subtree(three_jobs):
    registry = IncumbentRegistry(neh_upper_bound(three_jobs))
    metrics = sequential_dfs(three_jobs, root_node(three_jobs), registry)
    assert metrics.nodes_visited >= 1
    assert registry.best_makespan == 7


def test_single_worker_node_counts(small_oracle):
    """Every single-worker coordination visits exactly the Sequential tree"""
    for inst, _ in small_oracle:
        expected = search(inst, _config("seq")).metrics.nodes_visited
        variants = [
            _config("depthbounded", cutoff_depth=0, workers=1),
            _config("budget", backtrack_budget=2**63, workers=1),
            _config("stackstealing", workers=1),
            _config("direct"),
        ]
        for config in variants:
            result = search(inst, config)
            assert result.metrics.nodes_visited == expected, config
            assert result.proven_optimal


def test_direct_matches_sequential_metrics(small_oracle):
    for inst, optimum in small_oracle:
        direct = direct_search(inst)
        sequential = search(inst, _config("seq"))
        _check_result(inst, direct, optimum)
        for name in ("nodes_visited", "nodes_pruned", "backtracks", "incumbent_updates"):
            assert getattr(direct.metrics, name) == getattr(sequential.metrics, name)


@pytest.mark.parametrize("coordination", ALL)
@pytest.mark.parametrize("workers", [1, 2, 4])
def test_optimal_across_coordinations(small_oracle, coordination, workers):
    for seed in (0, 1):
        for inst, optimum in small_oracle:
            result = search(inst, _config(coordination, workers=workers, rng_seed=seed))
            _check_result(inst, result, optimum)


@pytest.mark.parametrize(
    "entry, coordination",
    [
        (depthbounded_search, Coordination.DEPTH_BOUNDED),
        (budget_search, Coordination.BUDGET),
        (stackstealing_search, Coordination.STACK_STEALING),
    ],
)
def test_coordination_entry_points(small_oracle, entry, coordination):
    inst, optimum = small_oracle[1]
    _check_result(inst, entry(inst, _config(coordination, workers=2)), optimum)
    with pytest.raises(ValueError, match="expected a"):
        entry(inst, _config("seq"))


@pytest.mark.slow
@pytest.mark.parametrize("coordination", ALL)
@pytest.mark.parametrize("workers", [1, 2, 4, 8])
def test_optimal_across_coordinations_full(full_oracle, coordination, workers):
    for seed in (0, 1, 2):
        for inst, optimum in full_oracle:
            result = search(inst, _config(coordination, workers=workers, rng_seed=seed))
            _check_result(inst, result, optimum)


@pytest.mark.parametrize("coordination", PARALLEL)
def test_task_conservation(small_oracle, coordination):
    overrides = {"backtrack_budget": 1} if coordination is Coordination.BUDGET else {}
    for inst, optimum in small_oracle:
        trace = TraceRecorder()
        engine = SearchEngine(inst, _config(coordination, workers=4, **overrides), trace=trace)
        result = engine.run()
        _check_result(inst, result, optimum)
        assert engine.counter.outstanding == 0
        assert engine.counter.increments == engine.counter.decrements
        assert result.metrics.tasks_spawned == result.metrics.tasks_completed
        # no subtree root is handed out twice
        keys = [tuple(map(tuple, e["key"])) for e in trace.of_kind("task")]
        assert len(keys) == len(set(keys)) == result.metrics.tasks_completed


@pytest.mark.parametrize(
    "coordination, overrides",
    [
        (Coordination.BUDGET, {"backtrack_budget": 1}),
        (Coordination.BUDGET, {"backtrack_budget": 3}),
        (Coordination.STACK_STEALING, {}),
        (Coordination.DEPTH_BOUNDED, {"cutoff_depth": 9}),
    ],
)
def test_no_node_visited_twice(monkeypatch, small_oracle, coordination, overrides):
    visits: Counter = Counter()
    lock = threading.Lock()
    visit = Explorer.visit

    def counting_visit(self, node):
        with lock:
            visits[node.key()] += 1
        return visit(self, node)

    monkeypatch.setattr(Explorer, "visit", counting_visit)
    for seed in (0, 1, 2):
        for inst, optimum in small_oracle:
            visits.clear()
            config = _config(coordination, workers=4, rng_seed=seed, **overrides)
            result = search(inst, config)
            _check_result(inst, result, optimum)
            assert max(visits.values()) == 1
            metrics = result.metrics
            assert sum(visits.values()) == metrics.nodes_visited - metrics.spawn_pruned


@pytest.mark.slow
def test_single_worker_node_counts_full(full_oracle):
    for inst, _ in full_oracle:
        expected = search(inst, _config("seq")).metrics.nodes_visited
        for config in (
            _config("depthbounded", cutoff_depth=0, workers=1),
            _config("budget", backtrack_budget=2**63, workers=1),
            _config("stackstealing", workers=1),
        ):
            assert search(inst, config).metrics.nodes_visited == expected, (inst.name, config)


def test_depthbounded_full_spawning(small_oracle):
    """With cutoff n every visited node is either a task or pruned at spawn time"""
    for inst, optimum in small_oracle:
        for workers in (1, 4):
            config = _config("depthbounded", cutoff_depth=inst.num_jobs, workers=workers)
            result = search(inst, config)
            _check_result(inst, result, optimum)
            metrics = result.metrics
            assert metrics.nodes_visited == metrics.tasks_spawned + metrics.spawn_pruned


def test_depthbounded_two_by_two(two_by_two):
    result = search(two_by_two, _config("depthbounded", cutoff_depth=1, workers=1))
    assert result.makespan == 4
    assert result.proven_optimal


@pytest.mark.parametrize("workers", [1, 4])
def test_budget_one_fragments_but_stays_optimal(small_oracle, workers):
    for inst, optimum in small_oracle:
        result = search(inst, _config("budget", backtrack_budget=1, workers=workers))
        _check_result(inst, result, optimum)
        assert result.metrics.tasks_spawned == result.metrics.tasks_completed


def test_budget_max_never_spills(small_oracle):
    for inst, _ in small_oracle:
        result = search(inst, _config("budget", backtrack_budget=2**63, workers=1))
        assert result.metrics.spills == 0
        assert result.metrics.tasks_spawned == 1


def test_budget_spill_resumes_generators():
    """A spill hands out exactly the children the task had not generated yet"""
    inst = generate_random_instance(7, 4, 20, 3)
    config = _config("budget", backtrack_budget=1, workers=1)
    engine = SearchEngine(inst, config)
    engine.workers = [Worker(engine, 0)]
    coordinator = BudgetCoordinator(engine)
    worker = engine.workers[0]
    generator = engine.generator
    root = generator.root()
    first = generator.children(root)
    consumed = next(first)
    child_iter = generator.children(consumed)
    next(child_iter)
    stack = [(root, first), (consumed, child_iter)]

    spilled = coordinator.spill(worker, stack)
    assert spilled == (inst.num_jobs - 1) + (inst.num_jobs - 2)
    assert stack == []
    assert worker.metrics.spills == 1
    # the owner resumes exactly where its depth-first search stopped
    assert worker.deque.pop().node.sigma2_rev == (2,)
    tasks = []
    while True:
        task = worker.deque.steal()
        if task is None:
            break
        tasks.append(task.node)
    # thieves take the shallowest frame first
    shallow = tasks[: inst.num_jobs - 1]
    assert [n.sigma1 for n in shallow] == [(j,) for j in range(inst.num_jobs - 1, 0, -1)]
    assert [n.sigma2_rev for n in tasks[inst.num_jobs - 1 :]] == [(j,) for j in range(6, 2, -1)]


def test_stackstealing_counters(small_oracle):
    for inst, optimum in small_oracle:
        result = search(inst, _config("stackstealing", workers=4, rng_seed=7))
        _check_result(inst, result, optimum)
        assert result.metrics.steals_succeeded <= result.metrics.steals_attempted


def _stackstealing_engine(inst, workers=2):
    engine = SearchEngine(inst, _config("stackstealing", workers=workers))
    engine.workers = [Worker(engine, i) for i in range(workers)]
    coordinator = StackStealingCoordinator(engine)
    engine.coordinator = coordinator
    return engine, coordinator


def test_stackstealing_empty_victim_answers_no_work(three_jobs):
    engine, coordinator = _stackstealing_engine(three_jobs)
    thief, victim = engine.workers
    victim.requests.put(thief.index)
    coordinator.serve(victim, None)
    assert thief.responses.get_nowait() is None
    assert engine.counter.outstanding == 0

    # acquire reads the answer and counts only the attempt
    thief.responses.put(None)
    assert coordinator.acquire(thief) is None
    assert thief.metrics.steals_attempted == 1
    assert thief.metrics.steals_succeeded == 0


def test_stackstealing_serves_shallowest_node():
    inst = generate_random_instance(6, 3, 10, 4)
    engine, coordinator = _stackstealing_engine(inst)
    thief, victim = engine.workers
    generator = engine.generator
    root = generator.root()
    top = generator.children(root)
    first = next(top)
    stack = [(root, top), (first, generator.children(first))]

    victim.requests.put(thief.index)
    coordinator.serve(victim, stack)
    stolen = thief.responses.get_nowait()
    assert stolen.sigma1 == (1,)
    assert stolen.depth == 1
    assert engine.counter.outstanding == 1
    assert victim.metrics.tasks_spawned == 1


def test_share_incumbent_disabled(small_oracle):
    """Private incumbents change node counts, never the optimum"""
    for inst, optimum in small_oracle:
        for coordination in PARALLEL:
            config = _config(coordination, workers=4, share_incumbent=False)
            _check_result(inst, search(inst, config), optimum)


class UnprunedGenerator(FlowshopGenerator):
    def bound(self, node):
        return 0


class FailingGenerator(FlowshopGenerator):
    def children(self, node):
        if node.depth == 1:
            raise RuntimeError("generator failure")
        return super().children(node)


class StallingGenerator(FlowshopGenerator):
    def children(self, node):
        time.sleep(0.6)
        return super().children(node)


@pytest.mark.parametrize(
    "coordination, workers", [("seq", 1), ("budget", 1), ("budget", 4), ("stackstealing", 4)]
)
def test_time_limit_leaves_result_unproven(coordination, workers):
    inst = generate_random_instance(9, 5, 20, 0)
    config = _config(coordination, workers=workers, time_limit=0.05)
    result = SearchEngine(inst, config, generator=UnprunedGenerator(inst)).run()
    assert not result.proven_optimal
    assert result.makespan <= neh_upper_bound(inst).makespan
    assert evaluate_makespan(inst, result.schedule.permutation) == result.makespan


def test_direct_time_limit():
    inst = generate_random_instance(10, 10, 99, 8)
    result = direct_search(inst, _config("direct", time_limit=1e-6))
    # the clock is first read at visit 1024
    assert result.proven_optimal == (result.metrics.nodes_visited < 1024)
    assert evaluate_makespan(inst, result.schedule.permutation) == result.makespan


@pytest.mark.parametrize("workers", [1, 3])
def test_worker_errors_propagate(three_jobs, workers):
    config = _config("budget", workers=workers)
    engine = SearchEngine(three_jobs, config, generator=FailingGenerator(three_jobs))
    engine.incumbent = IncumbentRegistry(Schedule((0, 1, 2), 10**6))
    with pytest.raises(RuntimeError, match="generator failure"):
        engine.run()


def test_watchdog_reports_stalled_search():
    inst = generate_random_instance(6, 3, 20, 1)
    config = _config("budget", workers=2, watchdog_interval=0.1)
    engine = SearchEngine(inst, config, generator=StallingGenerator(inst))
    engine.incumbent = IncumbentRegistry(Schedule(tuple(range(6)), 10**6))
    with pytest.raises(SearchDeadlockError) as info:
        engine.run()
    assert len(info.value.dump) == 3
    assert {"worker", "state", "deque"} <= set(info.value.dump[0])


def test_watchdog_closes_trace_file(tmp_path):
    inst = generate_random_instance(6, 3, 20, 1)
    path = tmp_path / "stalled.jsonl"
    config = _config("budget", workers=2, watchdog_interval=0.1, trace_path=str(path))
    engine = SearchEngine(inst, config, generator=StallingGenerator(inst))
    engine.incumbent = IncumbentRegistry(Schedule(tuple(range(6)), 10**6))
    with pytest.raises(SearchDeadlockError):
        engine.run()
    assert engine.trace.closed
    lines = path.read_text().splitlines()
    assert "task" in {json.loads(line)["event"] for line in lines}


def test_trace_records_spills():
    inst = generate_random_instance(7, 4, 20, 2)
    trace = TraceRecorder()
    result = SearchEngine(inst, _config("budget", backtrack_budget=1, workers=2), trace=trace).run()
    assert len(trace.of_kind("spill")) == result.metrics.spills
    assert len(trace.of_kind("incumbent")) == result.metrics.incumbent_updates


def test_trace_file(tmp_path, two_by_two):
    path = tmp_path / "trace.jsonl"
    search(two_by_two, _config("budget", workers=1, trace_path=str(path)))
    lines = path.read_text().splitlines()
    assert lines
    assert '"event": "task"' in lines[0]


def test_incumbent_registry_offer(three_jobs):
    registry = IncumbentRegistry(Schedule((0, 1, 2), 9))
    assert not registry.offer(Schedule((0, 2, 1), 10))
    assert not registry.offer(Schedule((0, 2, 1), 9))
    assert offer_incumbent(registry, Schedule((1, 2, 0), 7))
    assert registry.best_makespan == 7
    assert registry.best_schedule.permutation == (1, 2, 0)
    assert registry.history() == [9, 7]


def test_incumbent_stress():
    """Concurrent offers leave the global minimum; accepted values only decrease"""
    registry = IncumbentRegistry(Schedule((0,), 10**9))
    accepted = [[] for _ in range(8)]
    submitted = []

    def offerer(index: int) -> None:
        rng = np.random.default_rng(index)
        values = rng.integers(1, 10**8, size=10**4)
        submitted.append(int(values.min()))
        for value in values:
            if registry.offer(Schedule((0,), int(value))):
                accepted[index].append(int(value))

    threads = [threading.Thread(target=offerer, args=(i,)) for i in range(8)]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()

    assert registry.best_makespan == min(submitted)
    for values in accepted:
        assert all(a > b for a, b in zip(values, values[1:]))
    history = registry.history()
    assert all(a > b for a, b in zip(history, history[1:]))


def test_work_deque_ends():
    inst = generate_random_instance(3, 2, 5, 0)
    nodes = list(FlowshopGenerator(inst).children(root_node(inst)))
    deque = WorkDeque()
    deque.push_all(Task(n) for n in nodes)
    assert len(deque) == 3
    assert deque.pop().node is nodes[-1]
    assert deque.steal().node is nodes[0]
    assert deque.pop().node is nodes[1]
    assert deque.pop() is None
    assert deque.steal() is None


def test_task_counter_quiescence():
    counter = TaskCounter()
    counter.add(2)
    assert counter.done() == 1
    assert not counter.quiescent.is_set()
    assert counter.done() == 0
    assert counter.quiescent.is_set()
    assert counter.increments == counter.decrements == 2
    with pytest.raises(RuntimeError):
        counter.done()


def test_metrics_combine():
    a = SearchMetrics(nodes_visited=3, steals_attempted=1)
    b = SearchMetrics(nodes_visited=4, spills=2)
    total = SearchMetrics.combine([a, b])
    assert total.nodes_visited == 7
    assert total.spills == 2
    assert total.steals_attempted == 1
    assert SearchMetrics.from_dict(total.to_dict()) == total


def test_search_result_to_dict(two_by_two):
    data = search(two_by_two, _config("seq")).to_dict()
    assert data["schedule"] == {"permutation": [0, 1], "makespan": 4}
    assert data["proven_optimal"] is True
    assert data["config"]["coordination"] == "seq"
    assert data["metrics"]["nodes_visited"] == 1
