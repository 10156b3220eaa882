//! Shared-nothing parallel map with a deterministic result order.

use std::num::NonZeroUsize;
use std::thread;

/// Resolves a requested worker count; `0` means one per available core.
pub fn worker_count(jobs: usize) -> usize {
    if jobs > 0 {
        jobs
    } else {
        thread::available_parallelism().map_or(1, NonZeroUsize::get)
    }
}

/// Applies `f` to every item. Items are dealt round-robin to `jobs`
/// workers and the results are reassembled in input order, so the output
/// does not depend on the worker count or on scheduling.
pub fn sharded_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = worker_count(jobs).min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(&f).collect();
    }
    let f = &f;
    let shards: Vec<Vec<R>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|shard| scope.spawn(move || items.iter().skip(shard).step_by(workers).map(f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut iters: Vec<_> = shards.into_iter().map(Vec::into_iter).collect();
    (0..items.len())
        .map(|i| iters[i % workers].next().expect("shard holds its items"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_independent_of_jobs() {
        let items: Vec<u64> = (0..1000).collect();
        let serial = sharded_map(&items, 1, |x| x * x);
        for jobs in [2, 3, 7, 64] {
            assert_eq!(sharded_map(&items, jobs, |x| x * x), serial);
        }
        assert!(sharded_map(&Vec::<u64>::new(), 4, |x| *x).is_empty());
    }
}
