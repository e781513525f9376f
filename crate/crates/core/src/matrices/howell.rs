//! Howell normal form over `Z/n`, following Storjohann's elimination with
//! annihilator rows. Entries are plain residues in `[0, n)`.

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(g, s, t)` with `s*a + t*b = g` over the integers.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - (a / b) * t)
    }
}

fn md(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

fn mul(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// A unit `u` with `u * a = gcd(a, n)` modulo `n`.
fn normalizing_unit(a: u64, n: u64) -> u64 {
    let g = gcd(a, n);
    let (a1, n1) = (a / g, n / g);
    if n1 == 1 {
        return 1;
    }
    let (_, s, _) = ext_gcd(a1 as i128, n1 as i128);
    let base = md(s, n1);
    (0..g)
        .map(|k| base + k * n1)
        .find(|&u| gcd(u, n) == 1)
        .expect("a unit lift always exists")
}

/// Howell form of the row span of `rows` (each of equal length) over `Z/n`.
/// Zero rows are dropped from the output.
pub fn howell_form(rows: &[Vec<u64>], n: u64) -> Vec<Vec<u64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x % n).collect()).collect();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        for i in r + 1..a.len() {
            if a[i][c] == 0 {
                continue;
            }
            let (g, s, t) = ext_gcd(a[r][c] as i128, a[i][c] as i128);
            let (u, v) = (-(a[i][c] as i128) / g, a[r][c] as i128 / g);
            for j in c..ncols {
                let (x, y) = (a[r][j] as i128, a[i][j] as i128);
                a[r][j] = md(s * x + t * y, n);
                a[i][j] = md(u * x + v * y, n);
            }
        }
        if a[r][c] == 0 {
            continue;
        }
        let unit = normalizing_unit(a[r][c], n);
        for x in a[r].iter_mut() {
            *x = mul(*x, unit, n);
        }
        let piv = a[r][c];
        for i in 0..r {
            let q = a[i][c] / piv;
            if q == 0 {
                continue;
            }
            for j in c..ncols {
                a[i][j] = md(a[i][j] as i128 - (q as i128) * (a[r][j] as i128), n);
            }
        }
        let ann = n / piv;
        if ann != n && ann != 1 {
            let extra: Vec<u64> = a[r].iter().map(|&x| mul(x, ann, n)).collect();
            if extra.iter().any(|&x| x != 0) {
                a.push(extra);
            }
        }
        r += 1;
    }
    a.truncate(r);
    a.retain(|row| row.iter().any(|&x| x != 0));
    a
}

/// Generators of `{x in (Z/n)^ncols : M x = 0}` for `M` given by rows.
pub fn kernel_generators_mod(m: &[Vec<u64>], ncols: usize, n: u64) -> Vec<Vec<u64>> {
    let nrows = m.len();
    // Rows of [M^T | I]; rows of its Howell form vanishing on the first block
    // generate the kernel.
    let aug: Vec<Vec<u64>> = (0..ncols)
        .map(|j| {
            let mut row: Vec<u64> = (0..nrows).map(|i| m[i][j] % n).collect();
            row.extend((0..ncols).map(|k| u64::from(k == j)));
            row
        })
        .collect();
    howell_form(&aug, n)
        .into_iter()
        .filter(|row| row[..nrows].iter().all(|&x| x == 0))
        .map(|row| row[nrows..].to_vec())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn in_span(gens: &[Vec<u64>], target: &[u64], n: u64) -> bool {
        // Breadth-first closure; tiny cases only.
        let len = target.len();
        let mut seen = std::collections::HashSet::new();
        let mut frontier = vec![vec![0u64; len]];
        seen.insert(vec![0u64; len]);
        while let Some(v) = frontier.pop() {
            if v == target {
                return true;
            }
            for g in gens {
                let w: Vec<u64> = v.iter().zip(g).map(|(x, y)| (x + y) % n).collect();
                if seen.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        false
    }

    #[test]
    fn normalizing_units() {
        for n in 2..40u64 {
            for a in 1..n {
                let u = normalizing_unit(a, n);
                assert_eq!(gcd(u, n), 1);
                assert_eq!(mul(u, a, n), gcd(a, n));
            }
        }
    }

    #[test]
    fn kernel_complete_small_systems() {
        // 2x = 0 mod 4 has solutions {0, 2}; a Gaussian solver would miss 2.
        let k = kernel_generators_mod(&[vec![2]], 1, 4);
        assert!(in_span(&k, &[2], 4));
        assert!(!in_span(&k, &[1], 4));

        let n = 12;
        let m = vec![vec![2, 4, 6], vec![3, 0, 9]];
        let k = kernel_generators_mod(&m, 3, n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let v = [x, y, z];
                    let zero = m.iter().all(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<u64>() % n == 0);
                    assert_eq!(zero, in_span(&k, &v, n), "{v:?}");
                }
            }
        }
    }
}
