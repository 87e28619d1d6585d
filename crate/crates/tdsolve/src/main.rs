fn main() {
    std::process::exit(tdsolve::cli::run());
}
