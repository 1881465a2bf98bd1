use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::lie::{LieElement, Letter};
use super::straighten::AlgebraElement;
use crate::error::{Error, Result};
use crate::linalg::{pow_mod, simultaneous_eigenspaces, Matrix};
use crate::pchar::{PChar, PCharKind};
use crate::roots::{AlgebraKind, Root, RootDatum, Weight};

/// Outcome of the structural checks run on every module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub lie_homomorphism: bool,
    pub chi_reduction: bool,
    pub weight_table: bool,
    /// `p^{N-1} | dim`; only for sl with regular χ.
    pub regular_divisibility: Option<bool>,
    pub failures: Vec<String>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.lie_homomorphism && self.chi_reduction && self.weight_table && self.regular_divisibility != Some(false)
    }
}

/// A finite-dimensional `U_χ(𝔤)`-module given by generator matrices in a weight basis.
///
/// Stores `e_k = E_{k,k+1}`, `f_k = E_{k+1,k}` and the Cartan basis (`E_ii` for gl,
/// `h_{α_k}` for sl). Every basis vector is a weight vector.
#[derive(Clone)]
pub struct ModuleRep {
    datum: RootDatum,
    chi: PChar,
    raising: Vec<Matrix>,
    lowering: Vec<Matrix>,
    cartan: Vec<Matrix>,
    weights: Vec<Weight>,
    label: String,
    roots: OnceLock<BTreeMap<Root, Matrix>>,
}

/// Generator name, its element of gl_n, and its matrix.
pub struct Generator<'a> {
    pub name: String,
    pub element: LieElement,
    pub matrix: &'a Matrix,
}

impl ModuleRep {
    /// Build from matrices whose Cartan part is diagonal and agrees with `weights`.
    ///
    /// Runs [`ModuleRep::check_structure`] and rejects the module if any check fails.
    pub fn from_weight_basis(
        datum: RootDatum,
        chi: PChar,
        raising: Vec<Matrix>,
        lowering: Vec<Matrix>,
        cartan: Vec<Matrix>,
        weights: Vec<Weight>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let m = ModuleRep::assemble(datum, chi, raising, lowering, cartan, weights, label.into())?;
        let report = m.check_structure();
        if !report.all_pass() {
            return Err(Error::StructureViolation(report.failures.join("; ")));
        }
        Ok(m)
    }

    /// Build from arbitrary generator matrices, changing to a weight basis when needed.
    pub fn from_actions(
        datum: RootDatum,
        chi: PChar,
        raising: Vec<Matrix>,
        lowering: Vec<Matrix>,
        cartan: Vec<Matrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        let dim = cartan.first().map(|m| m.rows()).unwrap_or(0);
        let p = datum.p();
        if cartan.iter().all(|m| m.is_diagonal()) {
            let weights = diagonal_weights(&datum, &cartan, dim);
            return ModuleRep::from_weight_basis(datum, chi, raising, lowering, cartan, weights, label);
        }
        let pieces = simultaneous_eigenspaces(&cartan, dim, p)?;
        let cols: Vec<Vec<u8>> = pieces.into_iter().flat_map(|(_, b)| b).collect();
        let q = Matrix::from_vectors(&cols, dim, p).transpose();
        let qi = q.inverse().ok_or(Error::NotDiagonalizable)?;
        let conj = |a: &Matrix| qi.mul(a).mul(&q);
        let raising: Vec<Matrix> = raising.iter().map(conj).collect();
        let lowering: Vec<Matrix> = lowering.iter().map(conj).collect();
        let cartan: Vec<Matrix> = cartan.iter().map(conj).collect();
        let weights = diagonal_weights(&datum, &cartan, dim);
        ModuleRep::from_weight_basis(datum, chi, raising, lowering, cartan, weights, label)
    }

    fn assemble(
        datum: RootDatum,
        chi: PChar,
        raising: Vec<Matrix>,
        lowering: Vec<Matrix>,
        cartan: Vec<Matrix>,
        weights: Vec<Weight>,
        label: String,
    ) -> Result<Self> {
        let n = datum.n();
        let dim = weights.len();
        let cartan_len = match datum.kind() {
            AlgebraKind::GeneralLinear => n,
            AlgebraKind::SpecialLinear => n - 1,
        };
        if chi.n() != n || chi.p() != datum.p() {
            return Err(Error::InvalidInput("p-character does not match the root datum".into()));
        }
        if raising.len() != n - 1 || lowering.len() != n - 1 || cartan.len() != cartan_len {
            return Err(Error::InvalidInput("wrong number of generator matrices".into()));
        }
        for m in raising.iter().chain(&lowering).chain(&cartan) {
            if m.rows() != dim || m.cols() != dim || m.modulus() != datum.p() {
                return Err(Error::InvalidInput("generator matrix has the wrong shape".into()));
            }
        }
        Ok(ModuleRep { datum, chi, raising, lowering, cartan, weights, label, roots: OnceLock::new() })
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn kind(&self) -> AlgebraKind {
        self.datum.kind()
    }

    pub fn n(&self) -> usize {
        self.datum.n()
    }

    pub fn p(&self) -> u32 {
        self.datum.p()
    }

    pub fn chi(&self) -> &PChar {
        &self.chi
    }

    /// `e_k`, one-based.
    pub fn e(&self, k: usize) -> &Matrix {
        &self.raising[k - 1]
    }

    /// `f_k`, one-based.
    pub fn f(&self, k: usize) -> &Matrix {
        &self.lowering[k - 1]
    }

    pub fn raising(&self) -> &[Matrix] {
        &self.raising
    }

    pub fn lowering(&self) -> &[Matrix] {
        &self.lowering
    }

    pub fn cartan(&self) -> &[Matrix] {
        &self.cartan
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// `e_k`, `f_k` and the Cartan basis with their elements of gl_n.
    pub fn generators(&self) -> Vec<Generator<'_>> {
        let p = self.p();
        let mut out = Vec::new();
        for k in 1..self.n() {
            out.push(Generator { name: format!("e{k}"), element: LieElement::basis((k - 1, k)), matrix: &self.raising[k - 1] });
            out.push(Generator { name: format!("f{k}"), element: LieElement::basis((k, k - 1)), matrix: &self.lowering[k - 1] });
        }
        for (i, m) in self.cartan.iter().enumerate() {
            let (name, element) = match self.kind() {
                AlgebraKind::GeneralLinear => (format!("E{0}{0}", i + 1), LieElement::basis((i, i))),
                AlgebraKind::SpecialLinear => (format!("h{}", i + 1), LieElement::coroot(i + 1, p)),
            };
            out.push(Generator { name, element, matrix: m });
        }
        out
    }

    /// Matrices of `e_k`, `f_k` and the Cartan basis, in that order.
    pub fn generator_matrices(&self) -> Vec<&Matrix> {
        self.raising.iter().chain(&self.lowering).chain(&self.cartan).collect()
    }

    fn root_table(&self) -> &BTreeMap<Root, Matrix> {
        self.roots.get_or_init(|| {
            let n = self.n();
            let mut t: BTreeMap<Root, Matrix> = BTreeMap::new();
            for h in 1..n {
                for i in 0..n - h {
                    let j = i + h;
                    let (pos, neg) = if h == 1 {
                        (self.raising[i].clone(), self.lowering[i].clone())
                    } else {
                        // E_ij = [E_{i,j-1}, E_{j-1,j}],  E_ji = [E_{j,j-1}, E_{j-1,i}]
                        let pos = t[&Root::new(i, j - 1)].commutator(&self.raising[j - 1]);
                        let neg = self.lowering[j - 1].commutator(&t[&Root::new(j - 1, i)]);
                        (pos, neg)
                    };
                    t.insert(Root::new(i, j), pos);
                    t.insert(Root::new(j, i), neg);
                }
            }
            t
        })
    }

    /// Action of the root vector `E_ij` for the root `ε_i − ε_j`.
    pub fn root_vector_action(&self, root: Root) -> &Matrix {
        &self.root_table()[&root]
    }

    /// Action of an element of gl_n (of sl_n when the module is over sl_n).
    pub fn lie_action(&self, x: &LieElement) -> Result<Matrix> {
        let p = self.p();
        let dim = self.dim();
        let mut out = Matrix::zeros(dim, dim, p);
        let mut diag = vec![0u32; self.n()];
        for (&(i, j), &c) in &x.terms {
            if i == j {
                diag[i] = c;
            } else {
                out = out.add(&self.root_vector_action(Root::new(i, j)).scale(c));
            }
        }
        match self.kind() {
            AlgebraKind::GeneralLinear => {
                for (i, &c) in diag.iter().enumerate() {
                    if c != 0 {
                        out = out.add(&self.cartan[i].scale(c));
                    }
                }
            }
            AlgebraKind::SpecialLinear => {
                if diag.iter().sum::<u32>() % p != 0 {
                    return Err(Error::InvalidInput("element is not in sl_n".into()));
                }
                // Σ c_i E_ii = Σ_k (c_1 + … + c_k) h_k when Σ c_i = 0.
                let mut d = 0;
                for (k, &dk) in diag.iter().enumerate().take(self.n() - 1) {
                    d = (d + dk) % p;
                    if d != 0 {
                        out = out.add(&self.cartan[k].scale(d));
                    }
                }
            }
        }
        Ok(out)
    }

    fn letter_action(&self, x: Letter) -> Result<Matrix> {
        if x.0 != x.1 {
            return Ok(self.root_vector_action(Root::new(x.0, x.1)).clone());
        }
        match self.kind() {
            AlgebraKind::GeneralLinear => Ok(self.cartan[x.0].clone()),
            AlgebraKind::SpecialLinear => Err(Error::InvalidInput("E_ii does not act on an sl_n-module".into())),
        }
    }

    /// Action of an element of the enveloping algebra, word by word.
    pub fn element_action(&self, u: &AlgebraElement) -> Result<Matrix> {
        let p = self.p();
        let dim = self.dim();
        let mut out = Matrix::zeros(dim, dim, p);
        for (word, &c) in &u.terms {
            let mut m = Matrix::identity(dim, p);
            for &x in word {
                m = m.mul(&self.letter_action(x)?);
            }
            out = out.add(&m.scale(c));
        }
        Ok(out)
    }

    /// Lie homomorphism on generator pairs, χ-reduction on generators, weight table and,
    /// for regular sl characters, `p^{N-1} | dim`.
    pub fn check_structure(&self) -> StructureReport {
        let p = self.p();
        let dim = self.dim();
        let mut failures = Vec::new();

        let gens = self.generators();
        let mut lie_ok = true;
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let lhs = gens[a].matrix.commutator(gens[b].matrix);
                let br = gens[a].element.bracket(&gens[b].element, p);
                let ok = self.lie_action(&br).map(|rhs| rhs == lhs).unwrap_or(false);
                if !ok {
                    lie_ok = false;
                    failures.push(format!("[{}, {}] is not respected", gens[a].name, gens[b].name));
                }
            }
        }

        let mut chi_ok = true;
        for k in 1..self.n() {
            if !self.raising[k - 1].pow(p as u64).is_zero() {
                chi_ok = false;
                failures.push(format!("e{k}^p != 0"));
            }
            let s = pow_mod(self.chi.simple_negative(k), p as u64, p);
            if self.lowering[k - 1].pow(p as u64) != Matrix::identity(dim, p).scale(s) {
                chi_ok = false;
                failures.push(format!("f{k}^p != chi(f{k})^p"));
            }
        }
        for (i, h) in self.cartan.iter().enumerate() {
            if h.pow(p as u64) != *h {
                chi_ok = false;
                failures.push(format!("Cartan generator {} fails h^p = h", i + 1));
            }
        }

        let expected = diagonal_weights(&self.datum, &self.cartan, dim);
        let weight_ok = self.cartan.iter().all(|h| h.is_diagonal()) && expected == self.weights;
        if !weight_ok {
            failures.push("weight table disagrees with the Cartan action".into());
        }

        let regular_divisibility = (self.kind() == AlgebraKind::SpecialLinear
            && self.chi.kind() == PCharKind::Regular)
            .then(|| {
                let q = (p as usize).pow(self.datum.num_positive_roots() as u32 - 1);
                dim.is_multiple_of(q)
            });
        if regular_divisibility == Some(false) {
            failures.push("dimension is not divisible by p^(N-1)".into());
        }

        StructureReport {
            lie_homomorphism: lie_ok,
            chi_reduction: chi_ok,
            weight_table: weight_ok,
            regular_divisibility,
            failures,
        }
    }

    /// Relations on the whole Chevalley basis: brackets of all pairs and `X^p = χ(X)^p`
    /// for every root vector.
    pub fn check_all_relations(&self) -> StructureReport {
        let mut report = self.check_structure();
        let p = self.p();
        let n = self.n();
        let dim = self.dim();
        let mut basis: Vec<LieElement> = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    basis.push(LieElement::basis((i, j)));
                }
            }
        }
        match self.kind() {
            AlgebraKind::GeneralLinear => basis.extend((0..n).map(|i| LieElement::basis((i, i)))),
            AlgebraKind::SpecialLinear => basis.extend((1..n).map(|k| LieElement::coroot(k, p))),
        }
        let acts: Vec<Matrix> = basis.iter().map(|x| self.lie_action(x).expect("basis acts")).collect();
        for a in 0..basis.len() {
            for b in a + 1..basis.len() {
                let br = basis[a].bracket(&basis[b], p);
                if acts[a].commutator(&acts[b]) != self.lie_action(&br).expect("bracket acts") {
                    report.lie_homomorphism = false;
                    report.failures.push(format!("bracket {:?} {:?}", basis[a].terms, basis[b].terms));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let s = pow_mod(self.chi.value(i, j), p as u64, p);
                let x = self.root_vector_action(Root::new(i, j));
                if x.pow(p as u64) != Matrix::identity(dim, p).scale(s) {
                    report.chi_reduction = false;
                    report.failures.push(format!("E{}{}^p != chi^p", i + 1, j + 1));
                }
            }
        }
        report
    }

    /// Change basis by `q` (columns = new basis vectors) and return to a weight basis.
    pub fn conjugated(&self, q: &Matrix) -> Result<ModuleRep> {
        let qi = q.inverse().ok_or_else(|| Error::InvalidInput("basis change is singular".into()))?;
        let conj = |a: &Matrix| qi.mul(a).mul(q);
        ModuleRep::from_actions(
            self.datum.clone(),
            self.chi.clone(),
            self.raising.iter().map(conj).collect(),
            self.lowering.iter().map(conj).collect(),
            self.cartan.iter().map(conj).collect(),
            self.label.clone(),
        )
    }

    /// Formal character: weight multiplicities.
    pub fn character(&self) -> BTreeMap<Weight, usize> {
        let mut c = BTreeMap::new();
        for w in &self.weights {
            *c.entry(w.clone()).or_insert(0) += 1;
        }
        c
    }
}

fn diagonal_weights(datum: &RootDatum, cartan: &[Matrix], dim: usize) -> Vec<Weight> {
    (0..dim)
        .map(|b| Weight::new(cartan.iter().map(|h| h.get(b, b)).collect(), datum.coords(), datum.p()))
        .collect()
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleRep({}, {}_{} p={}, chi={}, dim={})",
            self.label,
            self.kind().short_name(),
            self.n(),
            self.p(),
            self.chi.text(),
            self.dim()
        )
    }
}
