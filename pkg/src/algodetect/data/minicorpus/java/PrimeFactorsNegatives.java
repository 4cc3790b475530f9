public class PrimeFactorsNegatives {

    public static boolean isPrime(int num) {
        if (num < 2) {
            return false;
        }
        for (int i = 2; i * i <= num; i++) {
            if (num % i == 0) {
                return false;
            }
        }
        return true;
    }

    public static boolean[] sieveOfEratosthenes(int limit) {
        boolean[] composite = new boolean[limit + 1];
        for (int prime = 2; prime * prime <= limit; prime++) {
            if (!composite[prime]) {
                for (int multiple = prime + prime; multiple <= limit; multiple += prime) {
                    composite[multiple] = true;
                }
            }
        }
        return composite;
    }

    public static int countDivisors(int num) {
        int count = 0;
        for (int i = 1; i <= num; i++) {
            if (num % i == 0) {
                count++;
            }
        }
        return count;
    }

    public static boolean perfectNumber(int num) {
        int total = 0;
        for (int i = 1; i < num; i++) {
            if (num % i == 0) {
                total += i;
            }
        }
        return total == num;
    }

    public static int digitProduct(int number) {
        int product = 1;
        while (number > 0) {
            product *= number % 10;
            number = number / 10;
        }
        return product;
    }

    public static int fizzBuzzCount(int limit) {
        int count = 0;
        for (int i = 1; i <= limit; i++) {
            if (i % 3 == 0 && i % 5 == 0) {
                count++;
            }
        }
        return count;
    }

    public static int arraySum(int[] values) {
        int total = 0;
        for (int i = 0; i < values.length; i++) {
            total += values[i];
        }
        return total;
    }

    public static boolean isPowerOfTwo(int value) {
        return value > 0 && (value & (value - 1)) == 0;
    }

    public static int asciiSum(String text) {
        int total = 0;
        for (int i = 0; i < text.length(); i++) {
            total += text.charAt(i);
        }
        return total;
    }

    public void setLimit(int limit) {
        this.limit = limit;
    }

    private int limit;
}
