/// Default symmetric frequency window, in units of `g`.
pub const DEFAULT_OMEGA_MAX: f64 = 2.0;
pub const DEFAULT_OMEGA_POINTS: usize = 2001;

/// `n` evenly spaced points on `[start, stop]`, endpoints included.
///
/// Points are computed as `start + i·step` with the last one pinned to
/// `stop`, so symmetric ranges give exactly mirrored values.
pub fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let step = (stop - start) / (n - 1) as f64;
            (0..n)
                .map(|i| {
                    if i == n - 1 {
                        stop
                    } else {
                        start + i as f64 * step
                    }
                })
                .collect()
        }
    }
}

/// Symmetric grid on `[−max, max]` whose `i`-th and `(n−1−i)`-th points are
/// exact negatives of each other.
pub fn symmetric(max: f64, n: usize) -> Vec<f64> {
    let half = linspace(-max, max, n);
    let mut out = half.clone();
    for i in 0..n {
        let j = n - 1 - i;
        if i < j {
            out[j] = -half[i];
        } else if i == j {
            out[i] = 0.0;
        }
    }
    out
}

pub fn default_omega_grid() -> Vec<f64> {
    symmetric(DEFAULT_OMEGA_MAX, DEFAULT_OMEGA_POINTS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_grid_mirrors() {
        let g = symmetric(2.0, 2001);
        assert_eq!(g.len(), 2001);
        assert_eq!(g[0], -2.0);
        assert_eq!(g[2000], 2.0);
        assert_eq!(g[1000], 0.0);
        for i in 0..2001 {
            assert_eq!(g[i], -g[2000 - i]);
        }
        assert!(g.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn linspace_edges() {
        assert!(linspace(0.0, 1.0, 0).is_empty());
        assert_eq!(linspace(3.0, 4.0, 1), vec![3.0]);
        assert_eq!(linspace(0.0, 1.0, 5), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }
}
