use std::process::ExitCode;

use qspec_core::gw::mirror_coefficients;
use qspec_core::spectrum::{n_prime_lambda_via_sum, n_prime_lambda_via_twopoint, LambdaRoutes};
use qspec_core::variety::{chern_coefficients, fano_index, primitive_dimension};
use qspec_core::CompleteIntersection;

use crate::{parse_instance, EXIT_FAIL};

fn dump(ci: &CompleteIntersection) -> qspec_core::Result<bool> {
    println!("instance {ci}  rho = {}", fano_index(ci));
    for (p, c) in chern_coefficients(ci)?.iter().enumerate() {
        println!("c_{p} = {c}");
    }
    for (a, i) in mirror_coefficients(ci)?.values().iter().enumerate() {
        println!("I_{a} = {i}");
    }
    if !ci.is_index_one_even() {
        println!(
            "case (iii) quantities unavailable (need even N and rho = 1; N = {}, rho = {})",
            ci.dim(),
            fano_index(ci)
        );
        return Ok(false);
    }
    let routes = LambdaRoutes::compute(ci)?;
    println!("N' = {}", primitive_dimension(ci)?);
    println!("Coeff_x^N(g) = {}", routes.n_prime_lambda);
    println!("N'lambda via sum = {}", n_prime_lambda_via_sum(ci)?);
    println!("N'lambda via two-point = {}", n_prime_lambda_via_twopoint(ci)?);
    println!("lambda closed form = {}", routes.closed_form);
    println!("lambda via sum = {}", routes.via_sum);
    println!("lambda via g = {}", routes.via_g);
    println!("lambda via two-point = {}", routes.via_twopoint);
    println!("routes consistent = {}", routes.consistent());
    Ok(routes.consistent())
}

pub fn run(dim: u32, degrees: Vec<u32>) -> ExitCode {
    let ci = match parse_instance(dim, degrees) {
        Ok(ci) => ci,
        Err(code) => return code,
    };
    match dump(&ci) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
