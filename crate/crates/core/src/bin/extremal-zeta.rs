fn main() {
    std::process::exit(extremal_zeta::cli::main());
}
