use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Mutex;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{DiskPoint, GroupElement, Model, SubgroupKind};

/// Systole of the Bolza surface, `2 arccosh(1 + sqrt 2)`: the displacement of
/// every side-pairing generator, and the minimum displacement of the origin
/// over all nontrivial group elements.
pub const BOLZA_SYSTOLE: f64 = 3.057141839226591;

const PROJECTIVE_DEDUP_TOL: f64 = 1e-8;
const MAX_WORD_LENGTH: usize = 12;

/// Result of a Dirichlet-domain reduction: `reduced = word * g`.
#[derive(Debug, Clone, Copy)]
pub struct Reduction {
    pub reduced: GroupElement,
    pub word: GroupElement,
    pub iterations: usize,
}

/// A discrete cocompact subgroup of `PSU(1,1)` given by generators, with a
/// cached family of group balls and Dirichlet reduction machinery. Logically
/// immutable: the cache only memoises `group_ball` results.
pub struct FuchsianGroup {
    generators: Vec<GroupElement>,
    /// generators followed by their inverses; the Dirichlet side pairings
    side_pairings: Vec<GroupElement>,
    /// circumradius of the Dirichlet domain about the origin
    domain_radius: f64,
    balls: Mutex<HashMap<usize, std::sync::Arc<Vec<GroupElement>>>>,
}

impl std::fmt::Debug for FuchsianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FuchsianGroup")
            .field("generators", &self.generators.len())
            .field("domain_radius", &self.domain_radius)
            .finish()
    }
}

impl FuchsianGroup {
    /// Build from disk-model generators. Validates the SU(1,1) shape and a
    /// discreteness witness: no cached nontrivial element displaces the
    /// origin by less than 0.5.
    pub fn new(generators: Vec<GroupElement>, domain_radius: f64) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::contract("need at least one generator"));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.model != Model::Disk {
                return Err(Error::ModelMismatch(Model::Disk, g.model));
            }
            if g.su11_defect() > 1e-10 {
                return Err(Error::contract(format!(
                    "generator {i} violates the SU(1,1) shape by {:.3e}",
                    g.su11_defect()
                )));
            }
            if g.is_identity(1e-10) {
                return Err(Error::contract(format!("generator {i} is the identity")));
            }
        }
        let mut side_pairings = generators.clone();
        side_pairings.extend(generators.iter().map(|g| g.invert()));
        let group = FuchsianGroup {
            generators,
            side_pairings,
            domain_radius,
            balls: Mutex::new(HashMap::new()),
        };
        let witness = group
            .group_ball(2)?
            .iter()
            .filter(|g| !g.is_identity(1e-8))
            .map(|g| g.displacement())
            .fold(f64::INFINITY, f64::min);
        if witness < 0.5 {
            return Err(Error::contract(format!(
                "discreteness witness failed: nontrivial element displaces the origin by {witness}"
            )));
        }
        Ok(group)
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    /// Generators and their inverses: the Dirichlet side pairings.
    pub fn side_pairings(&self) -> &[GroupElement] {
        &self.side_pairings
    }

    /// Circumradius of the Dirichlet domain about the origin.
    pub fn domain_radius(&self) -> f64 {
        self.domain_radius
    }

    /// All reduced words up to the given length, deduplicated projectively
    /// and sorted by displacement of the origin.
    pub fn group_ball(&self, max_word_length: usize) -> Result<std::sync::Arc<Vec<GroupElement>>> {
        if max_word_length > MAX_WORD_LENGTH {
            return Err(Error::contract(format!(
                "word length {max_word_length} exceeds the memory guard {MAX_WORD_LENGTH}"
            )));
        }
        if let Some(found) = self.balls.lock().unwrap().get(&max_word_length) {
            return Ok(found.clone());
        }

        let mut dedup = DisplacementDedup::new();
        let mut elements = vec![GroupElement::identity(Model::Disk)];
        dedup.insert(&elements[0], 0);
        let mut frontier: Vec<GroupElement> = vec![elements[0]];
        for _ in 0..max_word_length {
            let mut next = Vec::new();
            for g in &frontier {
                for s in &self.side_pairings {
                    let candidate = g.compose_unchecked(s);
                    if dedup.contains(&candidate, &elements) {
                        continue;
                    }
                    dedup.insert(&candidate, elements.len());
                    elements.push(candidate);
                    next.push(candidate);
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        elements.sort_by(|a, b| a.displacement().total_cmp(&b.displacement()));
        let arc = std::sync::Arc::new(elements);
        self.balls
            .lock()
            .unwrap()
            .insert(max_word_length, arc.clone());
        Ok(arc)
    }

    /// Greedy Dirichlet reduction: left-multiply by side pairings while one
    /// strictly decreases the displacement of the base point. Returns the
    /// reduced element and the word carrying `g` to it.
    pub fn reduce_to_domain(&self, g: &GroupElement) -> Result<Reduction> {
        let mut word = GroupElement::identity(Model::Disk);
        let mut z = g.base_point().value();
        let mut nsq = z.norm_sqr();
        let mut iterations = 0usize;
        loop {
            let mut best: Option<(usize, Complex64, f64)> = None;
            for (i, s) in self.side_pairings.iter().enumerate() {
                let w = s.apply_complex(z);
                let wn = w.norm_sqr();
                if wn < best.as_ref().map_or(nsq, |b| b.2) {
                    best = Some((i, w, wn));
                }
            }
            // |z|^2 is monotone in d(0, z); 1e-13 here corresponds to a
            // displacement improvement below ~1e-12 everywhere in the domain.
            match best {
                Some((i, w, wn)) if wn < nsq - 1e-13 => {
                    word = self.side_pairings[i].compose_unchecked(&word);
                    z = w;
                    nsq = wn;
                    iterations += 1;
                    if iterations >= 10_000 {
                        return Err(Error::NumericalInstability(format!(
                            "Dirichlet reduction did not terminate within 10000 steps (|z| = {})",
                            nsq.sqrt()
                        )));
                    }
                }
                _ => break,
            }
        }
        Ok(Reduction {
            reduced: word.compose_unchecked(g),
            word,
            iterations,
        })
    }

    /// Whether the base point already lies in the Dirichlet domain: no side
    /// pairing strictly decreases its displacement.
    pub fn in_domain(&self, z: Complex64) -> bool {
        let nsq = z.norm_sqr();
        self.side_pairings
            .iter()
            .all(|s| s.apply_complex(z).norm_sqr() >= nsq - 1e-13)
    }

    /// Text form: one line per generator, eight reals
    /// `re(a) im(a) re(b) im(b) re(c) im(c) re(d) im(d)`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.generators {
            let e = g.entries();
            let mut fields = Vec::with_capacity(8);
            for v in e {
                fields.push(format!("{:.16e}", v.re));
                fields.push(format!("{:.16e}", v.im));
            }
            out.push_str(&fields.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str, domain_radius: f64) -> Result<Self> {
        let mut generators = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let vals: std::result::Result<Vec<f64>, _> =
                line.split_whitespace().map(str::parse::<f64>).collect();
            let vals = vals.map_err(|e| {
                Error::contract(format!("generator line {}: {e}", lineno + 1))
            })?;
            if vals.len() != 8 {
                return Err(Error::contract(format!(
                    "generator line {} has {} fields, expected 8",
                    lineno + 1,
                    vals.len()
                )));
            }
            generators.push(GroupElement::new(
                Complex64::new(vals[0], vals[1]),
                Complex64::new(vals[2], vals[3]),
                Complex64::new(vals[4], vals[5]),
                Complex64::new(vals[6], vals[7]),
                Model::Disk,
            ));
        }
        FuchsianGroup::new(generators, domain_radius)
    }
}

impl GroupElement {
    /// Hyperbolic displacement of the origin, `d(0, g(0))`.
    pub fn displacement(&self) -> f64 {
        2.0 * self.base_point().value().norm().atanh()
    }
}

/// Projective deduplication keyed on quantized displacement buckets.
struct DisplacementDedup {
    buckets: HashMap<i64, Vec<usize>>,
}

impl DisplacementDedup {
    fn new() -> Self {
        DisplacementDedup {
            buckets: HashMap::new(),
        }
    }

    fn key(g: &GroupElement) -> i64 {
        (g.displacement() / 1e-6).round() as i64
    }

    fn contains(&self, g: &GroupElement, elements: &[GroupElement]) -> bool {
        let key = Self::key(g);
        for k in [key - 1, key, key + 1] {
            if let Some(indices) = self.buckets.get(&k) {
                for &i in indices {
                    if g.projective_distance(&elements[i]) < PROJECTIVE_DEDUP_TOL {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn insert(&mut self, g: &GroupElement, index: usize) {
        self.buckets.entry(Self::key(g)).or_default().push(index);
    }
}

/// The Bolza octagon group: four generators
/// `gamma_k = R_{k pi/4} T R_{k pi/4}^{-1}`, where `T` is the hyperbolic
/// translation with `cosh(l/2) = 1 + sqrt 2` and `R_theta` the disk rotation.
/// The octagon relation
/// `g0 g1^{-1} g2 g3^{-1} g0^{-1} g1 g2^{-1} g3 = id` holds to 1e-10.
pub fn bolza_group() -> FuchsianGroup {
    let ch = 1.0 + 2.0f64.sqrt();
    let sh = (ch * ch - 1.0).sqrt();
    let translation = GroupElement::new(
        Complex64::new(ch, 0.0),
        Complex64::new(sh, 0.0),
        Complex64::new(sh, 0.0),
        Complex64::new(ch, 0.0),
        Model::Disk,
    );
    let generators: Vec<GroupElement> = (0..4)
        .map(|k| {
            let rot = GroupElement::subgroup_in(SubgroupKind::K, k as f64 * PI / 4.0, Model::Disk);
            rot.compose_unchecked(&translation)
                .compose_unchecked(&rot.invert())
        })
        .collect();
    // circumradius of the regular octagon with vertex angle pi/4
    let domain_radius = (3.0 + 2.0 * 2.0f64.sqrt()).acosh();
    FuchsianGroup::new(generators, domain_radius).expect("Bolza generators are valid")
}

/// The Bolza octagon relation product; identity up to roundoff.
pub fn bolza_relation_product(group: &FuchsianGroup) -> GroupElement {
    let g = group.generators();
    let seq = [
        g[0],
        g[1].invert(),
        g[2],
        g[3].invert(),
        g[0].invert(),
        g[1],
        g[2].invert(),
        g[3],
    ];
    seq.iter()
        .fold(GroupElement::identity(Model::Disk), |acc, x| {
            acc.compose_unchecked(x)
        })
}

#[allow(dead_code)]
fn origin() -> DiskPoint {
    DiskPoint::origin()
}
