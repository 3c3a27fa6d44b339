//! Shared test oracles, independent of the implementation paths they
//! check.

// Each integration test binary compiles this module separately and uses
// a different subset of it.
#![allow(dead_code)]

use rand::Rng;

use sphere_ideals::mindist::GeneratorMatrix;

/// Pascal's triangle mod 2 up to row `max`, the binomial-parity oracle.
pub fn pascal_parity(max: usize) -> Vec<Vec<bool>> {
    let mut rows: Vec<Vec<bool>> = vec![vec![true]];
    for w in 1..=max {
        let prev = &rows[w - 1];
        let mut row = vec![true; w + 1];
        for i in 1..w {
            row[i] = prev[i - 1] ^ prev[i];
        }
        rows.push(row);
    }
    rows
}

/// A uniformly random full-rank k x n generator matrix.
pub fn random_full_rank(rng: &mut impl Rng, k: usize, n: usize) -> GeneratorMatrix {
    loop {
        let mask = (1u64 << n) - 1;
        let rows: Vec<u64> = (0..k).map(|_| rng.gen::<u64>() & mask).collect();
        let g = GeneratorMatrix::new(n, rows).unwrap();
        if g.rank() == k {
            return g;
        }
    }
}

/// One golden table row: (t, tau_phi, phi indices, tau_rho, rho indices).
pub type GoldenRow = (u64, u64, Vec<u64>, u64, Vec<u64>);

/// Parses the transcribed coefficient table, expanding `a..b` runs.
pub fn load_golden_table() -> Vec<GoldenRow> {
    let text = include_str!("../data/table1_golden.txt");
    text.lines()
        .map(|line| {
            let fields: Vec<&str> = line.split('|').collect();
            assert_eq!(fields.len(), 5, "bad golden row: {line}");
            (
                fields[0].parse().unwrap(),
                fields[1].parse().unwrap(),
                parse_runs(fields[2]),
                fields[3].parse().unwrap(),
                parse_runs(fields[4]),
            )
        })
        .collect()
}

fn parse_runs(field: &str) -> Vec<u64> {
    let mut out = Vec::new();
    for part in field.split(',') {
        match part.split_once("..") {
            Some((a, b)) => {
                let a: u64 = a.parse().unwrap();
                let b: u64 = b.parse().unwrap();
                out.extend(a..=b);
            }
            None => out.push(part.parse().unwrap()),
        }
    }
    out
}
