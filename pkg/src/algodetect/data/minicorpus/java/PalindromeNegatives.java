public class PalindromeNegatives {

    public static String reverseString(String s) {
        StringBuilder builder = new StringBuilder();
        for (int i = s.length() - 1; i >= 0; i--) {
            builder.append(s.charAt(i));
        }
        return builder.toString();
    }

    public static int countChar(String text, char target) {
        int count = 0;
        for (int i = 0; i < text.length(); i++) {
            if (text.charAt(i) == target) {
                count++;
            }
        }
        return count;
    }

    public static boolean anagramCheck(String a, String b) {
        if (a.length() != b.length()) {
            return false;
        }
        int[] counts = new int[256];
        for (int i = 0; i < a.length(); i++) {
            counts[a.charAt(i)]++;
            counts[b.charAt(i)]--;
        }
        for (int i = 0; i < counts.length; i++) {
            if (counts[i] != 0) {
                return false;
            }
        }
        return true;
    }

    public static char firstUniqueChar(String s) {
        for (int i = 0; i < s.length(); i++) {
            boolean unique = true;
            for (int j = 0; j < s.length(); j++) {
                if (i != j && s.charAt(i) == s.charAt(j)) {
                    unique = false;
                }
            }
            if (unique) {
                return s.charAt(i);
            }
        }
        return 0;
    }

    public static String removeSpaces(String s) {
        StringBuilder builder = new StringBuilder();
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            if (!Character.isWhitespace(c)) {
                builder.append(c);
            }
        }
        return builder.toString();
    }

    public static int sumLengths(String[] words) {
        int total = 0;
        for (int k = 0; k < words.length; k++) {
            total += words[k].length();
        }
        return total;
    }

    public static String rotateLeft(String s, int shift) {
        StringBuilder builder = new StringBuilder();
        int left = shift % s.length();
        for (int i = 0; i < s.length(); i++) {
            builder.append(s.charAt((i + left) % s.length()));
        }
        return builder.toString();
    }

    public static boolean compareArrays(int[] first, int[] second) {
        if (first.length != second.length) {
            return false;
        }
        for (int i = 0; i < first.length; i++) {
            if (first[i] != second[i]) {
                return false;
            }
        }
        return true;
    }

    public static String capitalizeWords(String s) {
        StringBuilder builder = new StringBuilder();
        boolean atStart = true;
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            if (Character.isWhitespace(c)) {
                atStart = true;
                builder.append(c);
            } else if (atStart) {
                builder.append(Character.toUpperCase(c));
                atStart = false;
            } else {
                builder.append(c);
            }
        }
        return builder.toString();
    }

    public int getWidth() {
        return this.width;
    }

    private int width;
}
