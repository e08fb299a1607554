# Tests for utils module
