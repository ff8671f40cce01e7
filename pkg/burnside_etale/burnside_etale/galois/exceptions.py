from dataclasses import dataclass

from burnside_etale.exceptions import InputException, InvariantViolation


@dataclass
class MissingPrimePartition(InputException, KeyError):
    prime: int
    group_order: int

    def __str__(self):
        return f'No cyclic-extensions partition given for the prime {self.prime} dividing {self.group_order}'


@dataclass
class EulerCharacteristicViolation(InvariantViolation, RuntimeError):
    """
    Raised when a gluing step does not change the Euler characteristic by 1 - |P|.
    """
    class_number: int
    chi_before: int
    chi_after: int
    num_primes: int

    def __str__(self):
        return f'Euler characteristic went from {self.chi_before} to {self.chi_after} when removing class ' \
               f'{self.class_number} with {self.num_primes} primes; expected ' \
               f'{self.chi_before + 1 - self.num_primes}'
