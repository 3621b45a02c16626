fn main() {
    std::process::exit(conway_core::cli::run());
}
