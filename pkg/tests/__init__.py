# Tests for transalg
