use criterion::{black_box, criterion_group, criterion_main, Criterion};
use dynred::algebra::Element;
use dynred::dra::{self, DraAlgebra, DraConfig};
use dynred::rmatrix;
use dynred::weyl::{self, WeylAlgebra, WeylConfig};
use dynred::Coeff;
use dynred_bench::{partial_fractions, root_products};

fn coefficients(c: &mut Criterion) {
    let fracs = partial_fractions(3, 8);
    c.bench_function("coeff/sum_partial_fractions", |b| {
        b.iter(|| fracs.iter().fold(Coeff::zero(3), |acc, f| &acc + f))
    });
    let prods = root_products(3, 6);
    c.bench_function("coeff/cancel_products", |b| {
        b.iter(|| {
            let num = prods.iter().fold(Coeff::one(3), |acc, f| &acc * f);
            let den = &prods[0] * &prods[1];
            black_box(num.checked_div(&den).unwrap())
        })
    });
    let text = "(h1^2-2*h1*h2+h2^2-1)/((h1-h2-1)*(h1-h2+2)) + 1/(h1-h3+1)";
    c.bench_function("coeff/parse", |b| b.iter(|| Coeff::parse(black_box(text), 3).unwrap()));
}

fn rmatrix_identities(c: &mut Criterion) {
    c.bench_function("rmatrix/dybe_n3", |b| b.iter(|| rmatrix::check_dybe(3)));
}

fn weyl_normal_form(c: &mut Criterion) {
    let alg = WeylAlgebra::new(WeylConfig::new(3, 2)).unwrap();
    let e = alg.parse("D[3,2]*D[1,1]*x[2,2]*x[1,1]*D[2,1]").unwrap();
    c.bench_function("weyl/normal_form_n3_N2", |b| b.iter(|| alg.normal_form(black_box(&e))));
    let small = WeylAlgebra::new(WeylConfig::new(2, 1)).unwrap();
    c.bench_function("weyl/reflection_n2", |b| b.iter(|| weyl::check_reflection(&small)));
}

fn dra_normal_form(c: &mut Criterion) {
    let two = DraAlgebra::single(2).unwrap();
    c.bench_function("dra/central_n2_power3", |b| b.iter(|| dra::central_element(&two, 3)));
    let e = two.parse("L[2,2]*L[1,2]*L[1,1]*L[2,1]").unwrap();
    c.bench_function("dra/normal_form_n2_degree4", |b| b.iter(|| two.normal_form(black_box(&e))));
    let braided = DraAlgebra::new(DraConfig::new(2).with_copies(2)).unwrap();
    let e = Element::monomial(2, &braided.config().generators()[..3], Coeff::one(2));
    c.bench_function("dra/normal_form_n2_two_copies", |b| b.iter(|| braided.normal_form(black_box(&e))));
    // a fresh algebra each time: the graded reducer memoizes normal forms
    c.bench_function("dra/normal_form_n3_degree3_cold", |b| {
        b.iter(|| {
            let three = DraAlgebra::single(3).unwrap();
            let e = three.parse("L[1,1]*L[2,1]*L[3,2]").unwrap();
            three.normal_form(&e)
        })
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = coefficients, rmatrix_identities, weyl_normal_form, dra_normal_form
}
criterion_main!(benches);
