//! Acceptance suite, one line per criterion. Exits nonzero if any
//! criterion fails or overruns its time limit.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kupershmidt::catalog::{get_entry, list_catalog, Asserted, RepChoice};
use kupershmidt::deformation::{
    check_deformation_pair, check_trivial_equivalence, trivial_deformation_from_pair,
};
use kupershmidt::operators::{
    is_dual_nijenhuis_pair, is_kupershmidt, is_nijenhuis, is_nijenhuis_pair, is_rota_baxter,
    nijenhuis_pair_semidirect_test, sub_adjacent_bracket,
};
use kupershmidt::rep::check_representation;
use kupershmidt::search::{grid_search, SearchConfig, SearchKind};
use kupershmidt::structures::{
    are_compatible_kupershmidt, compatible_by_combinations, hierarchy, is_kdn_structure,
    is_kn_structure, is_r_matrix, kdn_from_compatible, rbn_to_rmn, rmn_to_rbn, BilinearForm,
    Bivector,
};
use kupershmidt::{Document, Execution, LieAlgebra, Matrix, Rational, Representation};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| Rational::from(v)).collect()
}

fn all_matrices(n: usize, m: usize, grid: &[i64]) -> Vec<Matrix> {
    let slots = n * m;
    let mut out = Vec::new();
    let total = grid.len().pow(slots as u32);
    for mut code in 0..total {
        let mut entries = Vec::with_capacity(slots);
        for _ in 0..slots {
            entries.push(Rational::from(grid[code % grid.len()]));
            code /= grid.len();
        }
        out.push(Matrix::from_entries(n, m, entries).unwrap());
    }
    out
}

fn diagonals(n: usize, grid: &[i64]) -> Vec<Matrix> {
    all_matrices(1, n, grid)
        .into_iter()
        .map(|row| Matrix::diag(row.row(0)))
        .collect()
}

fn antisymmetric(n: usize, grid: &[i64]) -> Vec<Matrix> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    all_matrices(1, pairs.len(), grid)
        .into_iter()
        .map(|row| {
            let mut m = Matrix::zeros(n, n);
            for (k, &(i, j)) in pairs.iter().enumerate() {
                m.set(i, j, row.get(0, k).clone());
                m.set(j, i, -row.get(0, k));
            }
            m
        })
        .collect()
}

fn entry_algebra(name: &str) -> LieAlgebra {
    get_entry(name).unwrap().algebra
}

fn foundation() -> Outcome {
    let mut count = 0;
    for name in list_catalog() {
        let e = ok(get_entry(name), name)?;
        let g = &e.algebra;
        ensure(g.check_jacobi().passed(), || format!("{name}: jacobi"))?;
        for rho in [&e.adjoint, &e.coadjoint] {
            let r = ok(check_representation(g, rho), name)?;
            ensure(r.passed(), || format!("{name}: representation\n{r}"))?;
        }
        let sd = ok(g.semidirect_product(&e.adjoint), name)?;
        ensure(sd.check_jacobi().passed(), || format!("{name}: semidirect"))?;
        count += 1;
    }
    Ok(format!("{count} algebras"))
}

fn deformation_suite() -> Outcome {
    let aff1 = entry_algebra("aff1");
    let heis3 = entry_algebra("heis3");
    let mut families: Vec<(&LieAlgebra, Vec<(Matrix, Matrix)>)> = Vec::new();

    let grid2 = all_matrices(2, 2, &[0, 1]);
    let diag2 = diagonals(2, &[-1, 0, 1, 2]);
    let mut pairs = Vec::new();
    for n in grid2.iter() {
        for s in grid2.iter() {
            pairs.push((n.clone(), s.clone()));
        }
    }
    for n in &diag2 {
        for s in &diag2 {
            pairs.push((n.clone(), s.clone()));
        }
    }
    families.push((&aff1, pairs));

    let diag3 = diagonals(3, &[0, 1, 2]);
    let upper3: Vec<Matrix> = all_matrices(1, 3, &[0, 1])
        .into_iter()
        .map(|row| {
            let mut m = Matrix::zeros(3, 3);
            m.set(0, 1, row.get(0, 0).clone());
            m.set(0, 2, row.get(0, 1).clone());
            m.set(1, 2, row.get(0, 2).clone());
            m
        })
        .collect();
    let mut pairs = Vec::new();
    for family in [&diag3, &upper3] {
        for n in family {
            for s in family {
                pairs.push((n.clone(), s.clone()));
            }
        }
    }
    families.push((&heis3, pairs));

    let (mut total, mut passing, mut failing) = (0, 0, 0);
    for (g, pairs) in &families {
        let ad = g.adjoint();
        let coad = g.coadjoint();
        for (n, s) in pairs {
            total += 1;
            let direct = ok(is_nijenhuis_pair(g, &ad, n, s), "pair")?.passed();
            let dual_direct = ok(is_dual_nijenhuis_pair(g, &ad, n, s), "dual pair")?.passed();
            let st = s.transpose();
            let via_dual = ok(is_dual_nijenhuis_pair(g, &coad, n, &st), "dual pair")?.passed();
            let dual_via = ok(is_nijenhuis_pair(g, &coad, n, &st), "pair")?.passed();
            ensure(direct == via_dual && dual_direct == dual_via, || {
                format!("transpose duality disagrees at N={n}, S={s}")
            })?;
            let sd = ok(nijenhuis_pair_semidirect_test(g, &ad, n, s), "semidirect")?;
            ensure(sd.passed() == direct, || {
                format!("semidirect test disagrees at N={n}, S={s}")
            })?;
            if !direct {
                failing += 1;
                continue;
            }
            passing += 1;
            let d = ok(
                trivial_deformation_from_pair(g, &ad, n, s),
                "trivial deformation",
            )?;
            let r = ok(check_deformation_pair(g, &ad, &d), "deformation")?;
            ensure(r.passed(), || {
                format!("deformation fails at N={n}, S={s}\n{r}")
            })?;
            let r = ok(check_trivial_equivalence(g, &ad, n, s, &d), "equivalence")?;
            ensure(r.passed(), || {
                format!("equivalence fails at N={n}, S={s}\n{r}")
            })?;
        }
    }
    ensure(failing >= 5, || format!("only {failing} failing pairs"))?;
    Ok(format!(
        "{total} pairs, {passing} Nijenhuis pairs, {failing} failing"
    ))
}

struct Triple {
    label: String,
    g: LieAlgebra,
    rho: Representation,
    t: Matrix,
    s: Matrix,
    n: Matrix,
}

fn catalog_triples() -> Vec<Triple> {
    let mut out = Vec::new();
    for name in list_catalog() {
        let e = get_entry(name).unwrap();
        for b in e.structures() {
            let ops = &b.operators;
            out.push(Triple {
                label: format!("{name}/{}", b.name),
                g: e.algebra.clone(),
                rho: e.representation(b.representation).clone(),
                t: ops.t.clone().unwrap(),
                s: ops.s.clone().unwrap(),
                n: ops.n.clone().unwrap(),
            });
        }
    }
    out
}

fn scalar_triples() -> Vec<Triple> {
    let mut out = Vec::new();
    let grid = ints(&[-1, 0, 1]);
    for (name, choice) in [
        ("aff1", RepChoice::Adjoint),
        ("aff1", RepChoice::Coadjoint),
        ("heis3", RepChoice::Adjoint),
    ] {
        let e = get_entry(name).unwrap();
        let rho = e.representation(choice).clone();
        let config = SearchConfig::default();
        let kupershmidt =
            grid_search(&e.algebra, &rho, SearchKind::Kupershmidt, &grid, config).unwrap();
        let (n, m) = (e.algebra.dim(), rho.module_dim());
        for hit in kupershmidt.iter().step_by(if n == 3 { 7 } else { 1 }) {
            for lambda in [-1, 0, 2] {
                let q = Rational::from(lambda);
                out.push(Triple {
                    label: format!("{name}/{} lambda={lambda}", choice.name()),
                    g: e.algebra.clone(),
                    rho: rho.clone(),
                    t: hit.t.clone().unwrap(),
                    s: Matrix::scalar(m, &q),
                    n: Matrix::scalar(n, &q),
                });
            }
        }
    }
    out
}

fn structure_suite() -> Outcome {
    let mut triples = catalog_triples();
    let from_catalog = triples.len();
    triples.extend(scalar_triples());
    let mut invertible = 0;
    for tr in &triples {
        let Triple {
            label,
            g,
            rho,
            t,
            s,
            n,
        } = tr;
        let kn = ok(is_kn_structure(g, rho, t, s, n), label)?.passed();
        let kdn = ok(is_kdn_structure(g, rho, t, s, n), label)?.passed();
        ensure(kn || kdn, || format!("{label}: neither KN nor KdN"))?;

        let sub = ok(sub_adjacent_bracket(rho, t), label)?;
        let by_s = ok(sub.deform_by(s), label)?;
        let by_nt = ok(sub_adjacent_bracket(rho, &(n * t)), label)?;
        ensure(by_s == by_nt, || {
            format!("{label}: [,]^NT differs from [,]^T_S")
        })?;
        let mut deformed_reps = Vec::new();
        if kn {
            deformed_reps.push(ok(rho.hat(n, s), label)?);
        }
        if kdn {
            deformed_reps.push(ok(rho.tilde(n, s), label)?);
        }
        let gn = ok(g.deformed(n), label)?;
        for varrho in &deformed_reps {
            let via = ok(sub_adjacent_bracket(varrho, t), label)?;
            ensure(via == by_s, || {
                format!("{label}: deformed-representation bracket differs")
            })?;
            let r = ok(is_kupershmidt(&gn, varrho, t), label)?;
            ensure(r.passed(), || {
                format!("{label}: T not Kupershmidt on the deformed algebra\n{r}")
            })?;
        }
        let r = ok(is_nijenhuis(&sub, s), label)?;
        ensure(r.passed(), || {
            format!("{label}: S not Nijenhuis on the sub-adjacent algebra\n{r}")
        })?;
        let r = ok(is_kupershmidt(g, rho, &(n * t)), label)?;
        ensure(r.passed(), || format!("{label}: NT not Kupershmidt\n{r}"))?;
        if kn && t.is_square() && !t.determinant().unwrap().is_zero() {
            invertible += 1;
            ensure(kdn, || format!("{label}: invertible KN triple is not KdN"))?;
        }
    }
    ensure(invertible > 0, || "no invertible KN instance".into())?;
    Ok(format!(
        "{} triples ({from_catalog} from the catalog), {invertible} invertible KN",
        triples.len()
    ))
}

#[derive(Default)]
struct PairTally {
    pairs: usize,
    invertible: usize,
    incompatible_invertible: usize,
    constructions: usize,
}

fn check_operator_pairs(
    g: &LieAlgebra,
    rho: &Representation,
    ops: &[Matrix],
    tally: &mut PairTally,
) -> Result<(), String> {
    for t1 in ops {
        for t2 in ops {
            tally.pairs += 1;
            let closed = ok(are_compatible_kupershmidt(g, rho, t1, t2), "compatible")?;
            let by_def = ok(compatible_by_combinations(g, rho, t1, t2), "combinations")?;
            ensure(closed.passed() == by_def, || {
                format!("compatibility disagrees at T1={t1}, T2={t2}")
            })?;
            if t2.determinant().unwrap().is_zero() || t1.determinant().unwrap().is_zero() {
                continue;
            }
            tally.invertible += 1;
            let n = t1 * &t2.invert().unwrap();
            let nij = ok(is_nijenhuis(g, &n), "nijenhuis")?.passed();
            ensure(nij == closed.passed(), || {
                format!("invertible biconditional fails at T1={t1}, T2={t2}")
            })?;
            if !closed.passed() {
                tally.incompatible_invertible += 1;
                continue;
            }
            tally.constructions += 1;
            let (a, b) = ok(kdn_from_compatible(g, rho, t2, t1), "kdn_from_compatible")?;
            ensure(a.passed() && b.passed(), || {
                format!("constructed structures fail at T={t2}, T1={t1}")
            })?;
        }
    }
    Ok(())
}

fn kupershmidt_grid(
    name: &str,
    choice: RepChoice,
) -> Result<(LieAlgebra, Representation, Vec<Matrix>), String> {
    let e = ok(get_entry(name), name)?;
    let rho = e.representation(choice).clone();
    let ops = ok(
        grid_search(
            &e.algebra,
            &rho,
            SearchKind::Kupershmidt,
            &ints(&[-1, 0, 1]),
            SearchConfig::default(),
        ),
        "search",
    )?
    .into_iter()
    .map(|o| o.t.unwrap())
    .collect();
    Ok((e.algebra, rho, ops))
}

fn compatibility_suite() -> Outcome {
    let mut tally = PairTally::default();
    for choice in [RepChoice::Adjoint, RepChoice::Coadjoint] {
        let (g, rho, ops) = kupershmidt_grid("aff1", choice)?;
        check_operator_pairs(&g, &rho, &ops, &mut tally)?;
    }
    ensure(tally.invertible > 0, || {
        "no invertible pairs over aff1".into()
    })?;

    let (g, rho, ops) = kupershmidt_grid("heis3", RepChoice::Coadjoint)?;
    let invertible: Vec<Matrix> = ops
        .into_iter()
        .filter(|t| !t.determinant().unwrap().is_zero())
        .step_by(14)
        .collect();
    check_operator_pairs(&g, &rho, &invertible, &mut tally)?;
    ensure(tally.incompatible_invertible > 0, || {
        "no incompatible invertible pair".into()
    })?;

    let mut hierarchies = 0;
    for tr in catalog_triples() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            let h = ok(
                hierarchy(&tr.g, &tr.rho, &tr.t, &tr.s, &tr.n, 5, exec),
                &tr.label,
            )?;
            ensure(h.passed(), || {
                format!("{}: hierarchy\n{}", tr.label, h.report)
            })?;
            ensure(h.compatible.iter().flatten().all(|&c| c), || {
                format!("{}: compatibility matrix", tr.label)
            })?;
        }
        hierarchies += 1;
    }
    Ok(format!(
        "{} pairs, {} invertible ({} incompatible), {} constructions, {hierarchies} hierarchies",
        tally.pairs, tally.invertible, tally.incompatible_invertible, tally.constructions
    ))
}

fn correspondence_suite() -> Outcome {
    let sl2 = ok(get_entry("sl2"), "sl2")?;
    let killing = BilinearForm::killing(&sl2.algebra);
    ensure(
        killing.gram() == &Matrix::from_ints(&[[8, 0, 0], [0, 0, 4], [0, 4, 0]]),
        || format!("Killing form {}", killing.gram()),
    )?;
    let r = ok(
        kupershmidt::structures::check_bilinear_form(&sl2.algebra, &killing),
        "form",
    )?;
    ensure(r.passed(), || format!("Killing form check\n{r}"))?;

    let mut round_trips = 0;
    for name in list_catalog() {
        let e = ok(get_entry(name), name)?;
        for b in e.bundles.iter().filter(|b| b.asserts(Asserted::Rbn)) {
            let Some(form) = &e.bilinear_form else {
                continue;
            };
            if !b.asserts(Asserted::Skew) {
                continue;
            }
            let label = format!("{name}/{}", b.name);
            let g = &e.algebra;
            let (r0, n0) = (
                b.operators.r.clone().unwrap(),
                b.operators.n.clone().unwrap(),
            );
            let fwd = ok(rbn_to_rmn(g, &r0, &n0, form), &label)?;
            ensure(fwd.verdict.passed(), || {
                format!("{label}: r-matrix-Nijenhuis")
            })?;
            let back = ok(rmn_to_rbn(g, &fwd.value, &fwd.n, form), &label)?;
            ensure(back.verdict.passed(), || {
                format!("{label}: Rota-Baxter-Nijenhuis")
            })?;
            ensure(back.value == r0 && back.n == n0, || {
                format!("{label}: round trip")
            })?;

            let doc = ok(Document::from_catalog(&e, Some(b.name)), &label)?;
            let text = doc.to_json();
            let mut rmn = doc.clone();
            let ops = rmn.operators.as_mut().unwrap();
            ops.r = None;
            rmn.bivector = Some(kupershmidt::document::BivectorStanza {
                pi_sharp: fwd.value.sharp().clone(),
            });
            let reparsed = ok(Document::parse(&rmn.to_json()), &label)?;
            let mut rbn = reparsed.clone();
            let pi = ok(reparsed.bivector(), &label)?;
            let again = ok(rmn_to_rbn(g, &pi, &n0, form), &label)?;
            rbn.bivector = None;
            rbn.operators.as_mut().unwrap().r = Some(again.value);
            ensure(rbn.to_json() == text, || {
                format!("{label}: document round trip")
            })?;
            round_trips += 1;
        }
    }
    ensure(round_trips >= 2, || format!("{round_trips} round trips"))?;

    let mut bivectors = 0;
    for name in ["aff1", "heis3"] {
        let g = entry_algebra(name);
        let coad = g.coadjoint();
        for p in antisymmetric(g.dim(), &[-2, -1, 0, 1, 2]) {
            let as_r = ok(is_r_matrix(&g, &Bivector::new(p.clone()).unwrap()), name)?;
            let as_k = ok(is_kupershmidt(&g, &coad, &p), name)?;
            ensure(as_r.passed() == as_k.passed(), || {
                format!("{name}: r-matrix and Kupershmidt verdicts differ at {p}")
            })?;
            bivectors += 1;
        }
    }
    Ok(format!("{round_trips} round trips, {bivectors} bivectors"))
}

fn oracle_suite() -> Outcome {
    let g = entry_algebra("aff1");
    let grid = ints(&[-1, 0, 1]);
    let found: Vec<Matrix> = ok(
        grid_search(
            &g,
            &g.adjoint(),
            SearchKind::RotaBaxter,
            &grid,
            SearchConfig::default(),
        ),
        "search",
    )?
    .into_iter()
    .map(|o| o.r.unwrap())
    .collect();
    let all = all_matrices(2, 2, &[-1, 0, 1]);
    ensure(all.len() == 81, || "candidate count".into())?;
    let mut brute: Vec<Matrix> = all
        .into_iter()
        .filter(|r| is_rota_baxter(&g, r).unwrap().passed())
        .collect();
    let mut sorted = found.clone();
    sorted.sort_by_key(|m| m.entries().to_vec());
    brute.sort_by_key(|m| m.entries().to_vec());
    ensure(sorted == brute, || "search and brute force differ".into())?;
    for m in [
        Matrix::from_ints(&[[1, 0], [0, 0]]),
        Matrix::from_ints(&[[-1, 0], [0, 0]]),
        Matrix::zeros(2, 2),
    ] {
        ensure(found.contains(&m), || format!("missing {m}"))?;
    }
    Ok(format!("{} Rota-Baxter operators", found.len()))
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_kupershmidt"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn cli_suite() -> Outcome {
    let cases: &[(&[&str], &str, i32)] = &[
        (&["validate"], "aff1_exported.json", 0),
        (&["validate"], "broken_jacobi.json", 1),
        (&["validate"], "bad_rational.json", 2),
        (&["validate"], "truncated.json", 2),
        (&["validate"], "aff1_unknown_field.json", 2),
        (&["validate"], "aff1_bad_representation.json", 1),
        (&["check", "nijenhuis"], "aff1_nijenhuis_diag.json", 0),
        (&["check", "kn"], "aff1_kn_trivial.json", 0),
        (&["check", "rbn"], "aff1_rbn_identity.json", 1),
        (
            &["check", "rota_baxter"],
            "aff1_rota_baxter_identity.json",
            1,
        ),
        (&["check", "nijenhuis"], "aff1_missing_operators.json", 2),
        (
            &["check", "deformation"],
            "aff1_deformation_shift_e1.json",
            0,
        ),
        (
            &["check", "deformation"],
            "aff1_deformation_shift_e2.json",
            1,
        ),
        (&["check", "r_matrix"], "aff1_r_matrix.json", 0),
        (
            &["check", "r_matrix"],
            "aff1_bivector_not_antisymmetric.json",
            2,
        ),
        (&["check", "kn"], "aff1_kn_catalog.json", 0),
        (&["hierarchy", "--kmax", "3"], "aff1_kn_scalar2.json", 0),
        (&["hierarchy", "--kmax", "5"], "aff1_kn_catalog.json", 0),
        (&["hierarchy"], "aff1_hierarchy_not_kupershmidt.json", 1),
        (&["convert", "rbn-to-rmn"], "abelian3_rbn_zero.json", 0),
        (&["convert", "rbn-to-rmn"], "sl2_rbn.json", 0),
        (&["convert", "rbn-to-rmn"], "aff1_rbn_no_form.json", 2),
    ];
    let mut documents = std::collections::BTreeSet::new();
    for (args, file, expected) in cases {
        documents.insert(*file);
        let path = fixture(file);
        let mut argv: Vec<&str> = args.to_vec();
        argv.push(&path);
        let (code, human) = run_cli(&argv);
        ensure(code == *expected, || {
            format!("{args:?} {file}: exit {code}, expected {expected}")
        })?;
        let mut json_args = vec!["--json"];
        json_args.extend(argv.iter().copied());
        let (c1, first) = run_cli(&json_args);
        let (c2, second) = run_cli(&json_args);
        ensure(c1 == code && c2 == code, || {
            format!("{file}: --json exit code")
        })?;
        ensure(first == second, || {
            format!("{file}: --json output not stable")
        })?;
        if args[0] == "convert" || code == 2 {
            continue;
        }
        let v: serde_json::Value = ok(serde_json::from_slice(&first), file)?;
        let verdict = v["verdict"].as_bool();
        ensure(verdict == Some(code == 0), || {
            format!("{file}: JSON verdict {verdict:?} with exit {code}")
        })?;
        let text = String::from_utf8_lossy(&human);
        let last = text.lines().last().unwrap_or("");
        let says_pass = text.lines().all(|l| !l.contains("FAIL")) && !last.is_empty();
        ensure(says_pass == (code == 0), || format!("{file}: text verdict"))?;
    }
    ensure(documents.len() >= 12, || {
        format!("{} documents", documents.len())
    })?;

    let (code, out) = run_cli(&[
        "--json",
        "search",
        "rota_baxter",
        "--algebra",
        "aff1",
        "--grid",
        "-1,0,1",
    ]);
    ensure(code == 0, || "search exit code".into())?;
    let v: serde_json::Value = ok(serde_json::from_slice(&out), "search")?;
    ensure(v["count"] == 15, || format!("search count {}", v["count"]))?;
    let (code, _) = run_cli(&[
        "search",
        "kn_structure",
        "--algebra",
        "sl2",
        "--grid",
        "-1,0,1",
    ]);
    ensure(code == 2, || format!("cap exceeded gave exit {code}"))?;
    let (code, _) = run_cli(&["catalog", "export", "no_such_algebra"]);
    ensure(code == 2, || format!("unknown entry gave exit {code}"))?;
    Ok(format!(
        "{} cases over {} documents",
        cases.len(),
        documents.len()
    ))
}

type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("foundation", foundation, Some(1)),
        ("deformations", deformation_suite, Some(30)),
        ("structures", structure_suite, Some(30)),
        (
            "compatibility and hierarchies",
            compatibility_suite,
            Some(60),
        ),
        ("r-matrix correspondence", correspondence_suite, Some(30)),
        ("search oracle", oracle_suite, Some(1)),
        ("cli contract", cli_suite, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let over = limit.is_some_and(|l| elapsed > Duration::from_secs(l));
        let line = match (&result, over) {
            (Ok(detail), false) => format!("PASS ({detail})"),
            (Ok(_), true) => "FAIL (time limit exceeded)".to_string(),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if result.is_err() || over {
            failed += 1;
        }
        let limit = limit.map_or("no limit".to_string(), |l| format!("limit {l} s"));
        println!(
            "criterion {} [{name}]: {line} in {:.2} s ({limit})",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
