"""
Example usage of flowbnb

This example demonstrates how to:
1. Generate a random flowshop instance
2. Get an upper bound from NEH and a proven optimum by exhaustive search
3. Solve it with each coordination
4. Summarise repeated runs with compute_stats
"""

import os
import tempfile

from flowbnb import (
    RunRecord,
    SkeletonConfig,
    compute_stats,
    exhaustive_search,
    neh_upper_bound,
    read_instance,
    search,
)
from flowbnb.core import generate_random_instance, save_instance


def main():
    """Main example function"""
    print("flowbnb example")
    print("=" * 50)

    # 1. Instance
    print("\n1. Generating an instance...")
    inst = generate_random_instance(num_jobs=8, num_machines=5, max_time=20, seed=7)
    work_dir = tempfile.mkdtemp(prefix="flowbnb_")
    path = os.path.join(work_dir, f"{inst.name}.fsp")
    save_instance(inst, path, provenance=["example_usage.py"])
    inst = read_instance(path)
    print(f"✓ Instance: {inst} saved to {path}")

    # 2. Bounds
    print("\n2. Bounds...")
    neh = neh_upper_bound(inst)
    optimum = exhaustive_search(inst)
    print(f"✓ NEH upper bound: {neh.makespan} {list(neh.permutation)}")
    print(f"✓ Exhaustive optimum: {optimum.makespan} {list(optimum.permutation)}")

    # 3. Coordinations
    print("\n3. Solving with each coordination...")
    workers = min(4, os.cpu_count() or 1)
    records = []
    for coordination in ("seq", "depthbounded", "budget", "stackstealing"):
        config = SkeletonConfig.for_coordination(coordination, workers=workers)
        for repeat in range(3):
            result = search(inst, config)
            records.append(RunRecord.from_result(inst.name, config, result, repeat))
        assert result.makespan == optimum.makespan
        print(f"✓ {config}: {result}")

    # 4. Statistics
    print("\n4. Summary...")
    summary = compute_stats(records)
    print(summary.to_frame().to_string(index=False))

    print("\n" + "=" * 50)
    print("Example completed successfully!")


if __name__ == "__main__":
    main()
