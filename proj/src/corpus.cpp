namespace redcert {}
