fn main() {
    std::process::exit(margalg::cli::main_from_env());
}
