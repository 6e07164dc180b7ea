//! Exhaustive ground truth for small sizes.
//!
//! The prefix block-interchanges form an inverse-closed generator set for
//! the symmetric group, so the sorting distance of `p` equals its graph
//! distance from the identity under right multiplication, and one
//! breadth-first sweep from the identity computes the distance of every
//! permutation at once.  States are ranked into dense integers with the
//! factorial number system (Lehmer code), making the table a flat array of
//! byte-sized distances: n = 10 means 3,628,800 entries.
//!
//! A second sweep over *all* block-interchanges cross-checks the closed
//! formula for the unrestricted distance.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;

use crate::error::Error;
use crate::perm::{BlockInterchange, Permutation};

/// Default cap for the prefix-move table (9! = 362,880 states).
pub const DEFAULT_MAX_N: usize = 9;

/// Cap for the unrestricted table; the branching factor is much larger.
pub const UNRESTRICTED_MAX_N: usize = 6;

const TABLE_MAGIC: &[u8; 4] = b"PBID";
const TABLE_VERSION: u8 = 1;

pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial overflow");
    (1..=n as u64).product()
}

/// Lehmer rank of a permutation: its index in lexicographic order,
/// `0..n!`.
pub fn rank(p: &Permutation) -> u64 {
    let v = p.as_slice();
    let n = v.len();
    let mut r = 0u64;
    for i in 0..n {
        let smaller = v[i + 1..].iter().filter(|&&x| x < v[i]).count() as u64;
        r = r * (n - i) as u64 + smaller;
    }
    r
}

/// Inverse of [`rank`].
pub fn unrank(n: usize, r: u64) -> Permutation {
    assert!(
        n >= 1 && r < factorial(n),
        "rank {r} out of range for n={n}"
    );
    let mut out = vec![0u8; n];
    unrank_u8(n, r, &mut out);
    Permutation::from_images(out.into_iter().map(usize::from).collect()).unwrap()
}

/// All permutations of size `n` in lexicographic (rank) order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (0..factorial(n)).map(move |r| unrank(n, r))
}

fn rank_u8(v: &[u8]) -> u64 {
    let n = v.len();
    let mut r = 0u64;
    for i in 0..n {
        let mut smaller = 0u64;
        for m in i + 1..n {
            if v[m] < v[i] {
                smaller += 1;
            }
        }
        r = r * (n - i) as u64 + smaller;
    }
    r
}

fn unrank_u8(n: usize, r: u64, out: &mut [u8]) {
    debug_assert!(n <= 16);
    let mut digits = [0usize; 16];
    let mut rr = r;
    for k in 1..=n {
        digits[n - k] = (rr % k as u64) as usize;
        rr /= k as u64;
    }
    debug_assert_eq!(rr, 0);
    let mut avail = [0u8; 16];
    for (i, a) in avail.iter_mut().take(n).enumerate() {
        *a = (i + 1) as u8;
    }
    let mut len = n;
    for i in 0..n {
        let idx = digits[i];
        out[i] = avail[idx];
        avail.copy_within(idx + 1..len, idx);
        len -= 1;
    }
}

/// The generator set of prefix moves `bi(1,j,k,l)` with
/// `2 <= j <= k < l <= n+1`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    n: usize,
    moves: Vec<BlockInterchange>,
}

impl GeneratorSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn moves(&self) -> &[BlockInterchange] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn contains(&self, b: &BlockInterchange) -> bool {
        self.moves.contains(b)
    }
}

/// Enumerates all prefix block-interchanges for size `n`, in
/// lexicographic (j,k,l) order.  There are `C(n,3) + C(n,2)` of them and
/// the set is closed under inversion.
pub fn enumerate_generators(n: usize) -> GeneratorSet {
    assert!(n >= 1);
    let mut moves = Vec::new();
    for j in 2..=n {
        for k in j..=n {
            for l in k + 1..=n + 1 {
                moves.push(BlockInterchange::new(1, j, k, l).unwrap());
            }
        }
    }
    GeneratorSet { n, moves }
}

/// Enumerates every block-interchange for size `n` (any `i`), in
/// lexicographic (i,j,k,l) order.
pub fn all_block_interchanges(n: usize) -> Vec<BlockInterchange> {
    let mut moves = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j..=n {
                for l in k + 1..=n + 1 {
                    moves.push(BlockInterchange::new(i, j, k, l).unwrap());
                }
            }
        }
    }
    moves
}

/// Distances from the identity for every permutation of one size, indexed
/// by Lehmer rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of states, `n!`.
    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn distance(&self, p: &Permutation) -> usize {
        assert_eq!(p.n(), self.n, "permutation size does not match table");
        self.dist[rank(p) as usize] as usize
    }

    pub fn distance_by_rank(&self, r: u64) -> usize {
        self.dist[r as usize] as usize
    }

    /// Ball sizes per level: `spectrum()[d]` counts permutations at
    /// distance `d`; the counts sum to `n!`.
    pub fn spectrum(&self) -> BTreeMap<usize, u64> {
        let mut map = BTreeMap::new();
        for &d in &self.dist {
            *map.entry(d as usize).or_insert(0u64) += 1;
        }
        map
    }

    /// Maximum distance over the whole group.
    pub fn diameter(&self) -> usize {
        *self.dist.iter().max().unwrap() as usize
    }

    /// All permutations attaining the diameter, in rank order.
    pub fn witnesses(&self) -> Vec<Permutation> {
        let d = self.diameter() as u8;
        self.dist
            .iter()
            .enumerate()
            .filter(|&(_, &v)| v == d)
            .map(|(r, _)| unrank(self.n, r as u64))
            .collect()
    }

    /// Writes the binary table: an 8-byte header (magic `PBID`, version,
    /// `n`, two reserved zero bytes) followed by `n!` distance bytes in
    /// Lehmer-rank order, plus a JSON sidecar at `<path>.json` with the
    /// spectrum, diameter and witness count.
    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let mut f = fs::File::create(path)?;
        let header = [
            TABLE_MAGIC[0],
            TABLE_MAGIC[1],
            TABLE_MAGIC[2],
            TABLE_MAGIC[3],
            TABLE_VERSION,
            self.n as u8,
            0,
            0,
        ];
        f.write_all(&header)?;
        f.write_all(&self.dist)?;

        #[derive(Serialize)]
        struct Sidecar {
            n: usize,
            states: u64,
            diameter: usize,
            witness_count: usize,
            spectrum: BTreeMap<usize, u64>,
        }
        let sidecar = Sidecar {
            n: self.n,
            states: self.dist.len() as u64,
            diameter: self.diameter(),
            witness_count: self.witnesses().len(),
            spectrum: self.spectrum(),
        };
        let mut sidecar_path = path.as_os_str().to_owned();
        sidecar_path.push(".json");
        fs::write(sidecar_path, serde_json::to_string_pretty(&sidecar)?)
    }

    /// Reads a table written by [`DistanceTable::save`], validating the
    /// header and length.
    pub fn load(path: &Path) -> Result<DistanceTable, Error> {
        let bytes = fs::read(path).map_err(|e| Error::BadTableFile(e.to_string()))?;
        if bytes.len() < 8 || &bytes[0..4] != TABLE_MAGIC {
            return Err(Error::BadTableFile("missing PBID header".into()));
        }
        if bytes[4] != TABLE_VERSION {
            return Err(Error::BadTableFile(format!(
                "unsupported version {}",
                bytes[4]
            )));
        }
        let n = bytes[5] as usize;
        if n == 0 || n > 16 {
            return Err(Error::BadTableFile(format!("bad size {n}")));
        }
        let expected = factorial(n);
        let dist = bytes[8..].to_vec();
        if dist.len() as u64 != expected {
            return Err(Error::BadTableFile(format!(
                "expected {expected} distance bytes, found {}",
                dist.len()
            )));
        }
        if dist.contains(&u8::MAX) || dist[0] != 0 {
            return Err(Error::BadTableFile("table is not a completed BFS".into()));
        }
        Ok(DistanceTable { n, dist })
    }
}

/// Position maps (0-based source index per target slot) for a move list,
/// so BFS expansion is a single gather per move.
fn position_maps(n: usize, moves: &[BlockInterchange]) -> Vec<Vec<u8>> {
    moves
        .iter()
        .map(|b| {
            let s = b.permutation(n);
            (1..=n).map(|t| (s.image(t) - 1) as u8).collect()
        })
        .collect()
}

fn bfs_over(n: usize, moves: &[BlockInterchange]) -> DistanceTable {
    let total = factorial(n) as usize;
    let maps = position_maps(n, moves);
    let mut dist = vec![u8::MAX; total];
    dist[0] = 0;
    let mut frontier: Vec<u32> = vec![0];
    let mut cur = vec![0u8; n];
    let mut next = vec![0u8; n];
    let mut level: u8 = 0;
    while !frontier.is_empty() {
        let mut successors: Vec<u32> = Vec::new();
        for &r in &frontier {
            unrank_u8(n, r as u64, &mut cur);
            for map in &maps {
                for (slot, &src) in map.iter().enumerate() {
                    next[slot] = cur[src as usize];
                }
                let nr = rank_u8(&next) as usize;
                if dist[nr] == u8::MAX {
                    dist[nr] = level + 1;
                    successors.push(nr as u32);
                }
            }
        }
        level += 1;
        frontier = successors;
    }
    DistanceTable { n, dist }
}

/// Full table of prefix block-interchange distances, under the default
/// size cap.
pub fn bfs_distances(n: usize) -> Result<DistanceTable, Error> {
    bfs_distances_with_cap(n, DEFAULT_MAX_N)
}

/// As [`bfs_distances`] with an explicit cap (the budget is checked before
/// any allocation).
pub fn bfs_distances_with_cap(n: usize, cap: usize) -> Result<DistanceTable, Error> {
    assert!(n >= 1);
    if n > cap {
        return Err(Error::BudgetExceeded { n, cap });
    }
    Ok(bfs_over(n, enumerate_generators(n).moves()))
}

/// BFS over *all* block-interchanges: the unrestricted distance, used to
/// cross-check the closed formula `(n+1-c)/2`.
pub fn unrestricted_bfs_distances(n: usize) -> Result<DistanceTable, Error> {
    assert!(n >= 1);
    if n > UNRESTRICTED_MAX_N {
        return Err(Error::BudgetExceeded {
            n,
            cap: UNRESTRICTED_MAX_N,
        });
    }
    Ok(bfs_over(n, &all_block_interchanges(n)))
}

/// Builds the table and reports the maximum distance with all witnesses.
pub fn diameter(n: usize) -> Result<(usize, Vec<Permutation>), Error> {
    let table = bfs_distances(n)?;
    Ok((table.diameter(), table.witnesses()))
}

/// A permutation of size `n` whose bounds provably pin its distance at
/// `floor(2n/3)`, built from a small base pattern extended by
/// `m+1 m+3 m+2` blocks.
pub fn tight_family(n: usize) -> Result<Permutation, Error> {
    if n < 3 {
        return Err(Error::SizeTooSmall { n, min: 3 });
    }
    let mut v: Vec<usize> = match n % 3 {
        0 => vec![1, 3, 2],
        1 => vec![1, 4, 3, 2],
        _ => vec![1, 3, 2, 5, 4],
    };
    while v.len() < n {
        let m = v.len();
        v.extend_from_slice(&[m + 1, m + 3, m + 2]);
    }
    debug_assert_eq!(v.len(), n);
    Ok(Permutation::from_images(v).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(1), 1);
        assert_eq!(factorial(5), 120);
        assert_eq!(factorial(10), 3_628_800);
    }

    #[test]
    fn rank_is_lexicographic() {
        assert_eq!(rank(&Permutation::identity(7)), 0);
        let all: Vec<Permutation> = permutations(3).collect();
        let expected = ["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"];
        assert_eq!(all.len(), 6);
        for (i, q) in all.iter().enumerate() {
            assert_eq!(q, &p(expected[i]));
            assert_eq!(rank(q), i as u64);
        }
    }

    #[test]
    fn rank_unrank_round_trip() {
        for n in 1..=6 {
            for r in 0..factorial(n) {
                assert_eq!(rank(&unrank(n, r)), r);
            }
        }
    }

    #[test]
    fn generator_counts_match_formula() {
        let choose = |n: u64, k: u64| -> u64 {
            if n < k {
                return 0;
            }
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        };
        for n in 1..=8u64 {
            let set = enumerate_generators(n as usize);
            assert_eq!(set.len() as u64, choose(n, 3) + choose(n, 2), "n={n}");
        }
        assert_eq!(enumerate_generators(1).len(), 0);
        assert_eq!(enumerate_generators(3).len(), 4);
        assert_eq!(enumerate_generators(4).len(), 10);
    }

    #[test]
    fn generators_on_small_identity() {
        let id = Permutation::identity(3);
        let reached: Vec<Permutation> = enumerate_generators(3)
            .moves()
            .iter()
            .map(|b| id.apply(b))
            .collect();
        assert_eq!(
            reached,
            vec![p("2 1 3"), p("2 3 1"), p("3 2 1"), p("3 1 2")]
        );
    }

    #[test]
    fn generator_set_is_inverse_closed() {
        for n in 1..=7 {
            let set = enumerate_generators(n);
            for b in set.moves() {
                assert!(set.contains(&b.prefix_inverse()), "n={n} b={b}");
            }
        }
    }

    #[test]
    fn bfs_three_elements() {
        let t = bfs_distances(3).unwrap();
        assert_eq!(t.distance(&Permutation::identity(3)), 0);
        assert_eq!(t.distance(&p("2 1 3")), 1);
        assert_eq!(t.distance(&p("2 3 1")), 1);
        assert_eq!(t.distance(&p("3 2 1")), 1);
        assert_eq!(t.distance(&p("3 1 2")), 1);
        assert_eq!(t.distance(&p("1 3 2")), 2);
    }

    #[test]
    fn bfs_known_distances() {
        let t = bfs_distances(4).unwrap();
        assert_eq!(t.distance(&p("3 1 4 2")), 2);
        assert_eq!(t.distance(&p("1 4 3 2")), 2);
    }

    #[test]
    fn bfs_respects_budget() {
        assert_eq!(
            bfs_distances_with_cap(7, 6),
            Err(Error::BudgetExceeded { n: 7, cap: 6 })
        );
        assert!(bfs_distances_with_cap(6, 6).is_ok());
    }

    #[test]
    fn spectrum_examples() {
        let t = bfs_distances(3).unwrap();
        let s = t.spectrum();
        assert_eq!(s.len(), 3);
        assert_eq!(s[&0], 1);
        assert_eq!(s[&1], 4);
        assert_eq!(s[&2], 1);

        let t = bfs_distances(1).unwrap();
        assert_eq!(t.spectrum().len(), 1);
        assert_eq!(t.spectrum()[&0], 1);

        let t = bfs_distances(4).unwrap();
        let s = t.spectrum();
        assert_eq!(s.values().sum::<u64>(), 24);
        assert_eq!(*s.keys().max().unwrap(), 2);
    }

    #[test]
    fn bfs_distance_recurrence() {
        // dist(p) = 1 + min over generators of dist(p·b) for p != identity.
        for n in 1..=5 {
            let t = bfs_distances(n).unwrap();
            let gens = enumerate_generators(n);
            for q in permutations(n) {
                let d = t.distance(&q);
                if q.is_identity() {
                    assert_eq!(d, 0);
                    continue;
                }
                let best = gens
                    .moves()
                    .iter()
                    .map(|b| t.distance(&q.apply(b)))
                    .min()
                    .unwrap();
                assert_eq!(d, 1 + best, "q={q}");
            }
        }
    }

    #[test]
    fn diameter_examples() {
        let (d, witnesses) = diameter(3).unwrap();
        assert_eq!(d, 2);
        assert_eq!(witnesses, vec![p("1 3 2")]);

        let (d, witnesses) = diameter(1).unwrap();
        assert_eq!(d, 0);
        assert_eq!(witnesses, vec![Permutation::identity(1)]);

        let (d, witnesses) = diameter(6).unwrap();
        assert_eq!(d, 4);
        assert!(witnesses.contains(&p("1 3 2 4 6 5")));
    }

    #[test]
    fn tight_family_examples() {
        assert_eq!(tight_family(3).unwrap(), p("1 3 2"));
        assert_eq!(tight_family(4).unwrap(), p("1 4 3 2"));
        assert_eq!(tight_family(5).unwrap(), p("1 3 2 5 4"));
        assert_eq!(tight_family(6).unwrap(), p("1 3 2 4 6 5"));
        assert_eq!(tight_family(7).unwrap(), p("1 4 3 2 5 7 6"));
        assert_eq!(tight_family(2), Err(Error::SizeTooSmall { n: 2, min: 3 }));
    }

    #[test]
    fn unrestricted_distances_match_formula() {
        for n in 1..=5 {
            let t = unrestricted_bfs_distances(n).unwrap();
            for q in permutations(n) {
                assert_eq!(
                    t.distance(&q) as i64,
                    crate::bounds::block_interchange_distance(&q),
                    "q={q}"
                );
            }
        }
        assert!(unrestricted_bfs_distances(7).is_err());
    }

    #[test]
    fn save_and_load_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s5.pbid");
        let t = bfs_distances(5).unwrap();
        t.save(&path).unwrap();
        let loaded = DistanceTable::load(&path).unwrap();
        assert_eq!(t, loaded);

        let sidecar = fs::read_to_string(dir.path().join("s5.pbid.json")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&sidecar).unwrap();
        assert_eq!(v["n"], 5);
        assert_eq!(v["states"], 120);
        assert_eq!(v["diameter"], 3);
        assert_eq!(v["spectrum"]["0"], 1);
    }

    #[test]
    fn load_rejects_corrupt_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.pbid");

        fs::write(&path, b"nope").unwrap();
        assert!(DistanceTable::load(&path).is_err());

        fs::write(&path, b"PBID\x01\x03\x00\x00only").unwrap();
        assert!(DistanceTable::load(&path).is_err());

        let mut good = b"PBID\x01\x02\x00\x00".to_vec();
        good.extend_from_slice(&[0, 1]);
        fs::write(&path, &good).unwrap();
        assert!(DistanceTable::load(&path).is_ok());

        let mut wrong_version = good.clone();
        wrong_version[4] = 9;
        fs::write(&path, &wrong_version).unwrap();
        assert!(DistanceTable::load(&path).is_err());
    }
}
