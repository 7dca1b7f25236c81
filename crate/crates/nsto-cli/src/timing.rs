use std::time::Instant;

pub const WARMUPS: usize = 3;

/// Median wall time of `reps` calls after `warmups` discarded ones.
pub fn median_ns<T>(warmups: usize, reps: usize, mut f: impl FnMut() -> T) -> u64 {
    for _ in 0..warmups {
        std::hint::black_box(f());
    }
    let mut times: Vec<u64> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed().as_nanos() as u64
        })
        .collect();
    times.sort_unstable();
    let mid = times.len() / 2;
    if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_every_call() {
        let mut calls = 0;
        median_ns(3, 10, || calls += 1);
        assert_eq!(calls, 13);
    }
}
